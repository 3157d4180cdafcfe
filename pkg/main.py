"""
Runs the gpcode command line from a checkout, without installing the package:

    python3 main.py construct --family wq --q 2 --out w2.gpg
    python3 main.py report --config run.json --out report.json

Settings (GPCODE_THREADS, GPCODE_LOG_LEVEL, ...) are read from the
environment or a .env file.
"""

import sys

from src.framework.entrypoints.cli import main

if __name__ == "__main__":
    sys.exit(main())
