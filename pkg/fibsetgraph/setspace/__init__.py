"""
Non-empty subsets of {1..n} and their (s, i) vertex labels
"""
