"""
Entry point for the opcyl package.
"""

from .cli.main import main

if __name__ == "__main__":
    main()
