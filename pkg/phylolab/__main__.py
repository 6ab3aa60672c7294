import sys

from phylolab.cli.main import main

sys.exit(main())
