#!/usr/bin/env python3
"""Rerun every pinned result and print one pass/fail row each.

Same as `equilines reproduce-table --uniqueness`; kept as a script so the
battery can be run straight from a checkout.
"""

import sys

from equilines.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce-table", "--uniqueness"] + sys.argv[1:]))
