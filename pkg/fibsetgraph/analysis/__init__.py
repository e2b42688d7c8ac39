"""
Graph invariants, loop sequences and exact exponential solvers
"""
