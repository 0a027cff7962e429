import sys

from opoly.cli import main

sys.exit(main())
