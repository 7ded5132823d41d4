import sys

from rajchmanpy.cli import main


sys.exit(main())
