import sys

from treeorder.cli import main

sys.exit(main())
