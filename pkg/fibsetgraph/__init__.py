"""
Fibonacci-sum set-graphs: generators, invariants and a claim-verification harness
"""
__version__ = "0.1.0"
