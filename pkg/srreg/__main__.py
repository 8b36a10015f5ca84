import sys

from srreg.srreg import main

sys.exit(main())
