"""
Builders for Fibonacci-sum graphs, set-graphs and their derivative multigraphs
"""
