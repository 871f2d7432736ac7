import sys

from mincq.main import main

sys.exit(main())
