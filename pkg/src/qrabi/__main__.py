import sys

from qrabi.cli.main import main

sys.exit(main())
