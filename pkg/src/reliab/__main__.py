import sys

from reliab.cli import main

sys.exit(main())
