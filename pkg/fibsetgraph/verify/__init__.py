"""
Claim registry and the suite that checks every claim over a range of n
"""
