import sys

from cihash.cli import main

sys.exit(main())
