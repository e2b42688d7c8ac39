"""
Graph data model: multigraphs with loop counts, simple graphs and popping
"""
