import sys

from nonoverlap.cli import main

sys.exit(main())
