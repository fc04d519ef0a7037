import sys

from trabound.cli import main

sys.exit(main())
