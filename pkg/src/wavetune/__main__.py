import sys

from wavetune.cli import main


sys.exit(main())
