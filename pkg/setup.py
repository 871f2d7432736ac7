# setup.py
# install script using setuptools, the metadata lives in setup.cfg

import sys
import site

from setuptools import setup


if __name__ == "__main__":
    # explicitly allow installation in user site in development mode
    site.ENABLE_USER_SITE = "--user" in sys.argv[1:]
    setup()
