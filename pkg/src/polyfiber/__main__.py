from polyfiber.cli import main
import sys

sys.exit(main())
