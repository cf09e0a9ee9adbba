import sys

from kingdom.cli import main

sys.exit(main())
