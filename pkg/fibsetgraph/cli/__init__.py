"""
Command-line front end and graph document formats
"""
