"""
Integer-sequence services: Fibonacci/Lucas generation, membership and edge counting
"""
