import sys

from gaussft.cli import main

sys.exit(main())
