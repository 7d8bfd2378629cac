import sys

from hiercode.cli import main

sys.exit(main())
