import sys

from hvec.cli import main

sys.exit(main())
