# main.py
import sys

from src.cli import run


def main():
    """Command-line entry point"""
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
