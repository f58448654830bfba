from bbinterp.cli import main
import sys

sys.exit(main())
