import sys

from npcube.cli import main

sys.exit(main())
