import sys

from paramodring.main import main

sys.exit(main())
