#!/usr/bin/env python3
"""
Command-line entry point for crnparam
Runs one analysis subcommand on a network file
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from crnparam.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
