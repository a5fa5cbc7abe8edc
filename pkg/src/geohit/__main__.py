import sys

from geohit.cli import main

sys.exit(main())
