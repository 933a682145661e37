import sys

from blackpeg.cli import main

sys.exit(main())
