import sys

from cavity_tangle import main


if __name__ == '__main__':
    sys.exit(main())
