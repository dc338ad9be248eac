#!/usr/bin/env python3
"""Regenerate the benchmark tables and print the check summary.

Equivalent to `pensionlab reproduce-paper --out reference_tables`.
"""

import sys

from pensionlab.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce-paper", "--out", "reference_tables", *sys.argv[1:]]))
