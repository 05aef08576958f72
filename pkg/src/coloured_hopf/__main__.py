import sys

from coloured_hopf.cli import main

sys.exit(main())
