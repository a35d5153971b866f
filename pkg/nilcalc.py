"""
Command-line interface for nilpotent multiplier computations and verification suites.

Usage:
    python nilcalc.py witt -n 2 -d 10
    python nilcalc.py multiplier -G 8,2,2 -c 1
    python nilcalc.py verify --suite bound --max-n 20 --max-c 4 --expect clean
"""
import os
import sys
from pathlib import Path

# Set up path to allow importing the package from a checkout
sys.path.insert(0, str(Path(os.path.dirname(os.path.abspath(__file__)))))

from nilmult.cli.main import main

if __name__ == '__main__':
    sys.exit(main())
