import sys

from xorca.cli import main

sys.exit(main())
