"""
Fibonacci-sum set-graph toolkit
Main entry point: python -m fibsetgraph.main <generate|analyze|verify> ...
"""
import sys

from fibsetgraph.cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
