from __future__ import print_function

from os import getenv
import sys
from unittest import TestCase, skip, skipIf, main

from curlhvi import log_level, logging
from curlhvi.core.config import options, default_values
import numpy as np

_ = skip # shut-up pylint
_ = skipIf

#: long convergence studies only run when CURLHVI_SLOW is set
SLOW = bool(getenv("CURLHVI_SLOW"))


class CurlHVITest(TestCase):
    CRITICAL = logging.CRITICAL
    ERROR = logging.ERROR
    WARNING = logging.WARNING
    INFO = logging.INFO
    DEBUG = logging.DEBUG
    NOTSET = logging.NOTSET
    levels = {
        'CRITICAL': logging.CRITICAL,
        'ERROR': logging.ERROR,
        'WARNING': logging.WARNING,
        'INFO': logging.INFO,
        'DEBUG': logging.DEBUG,
        'NOTSET': logging.NOTSET
    }
    _logged = False

    @staticmethod
    def terse(x):
        _ = x
        print('.', end='', file=sys.stderr)

    def setUp(self):
        np.random.seed(42)
        level = getenv("LOGLEVEL")
        if level in self.levels:
            level = self.levels[level]
        if not CurlHVITest._logged:
            # one handler for the whole run
            CurlHVITest._logged = True
            if level:
                self.log(int(level))
            else:
                self.log()

    def tearDown(self):
        # options changed by a test do not leak into the next one
        options.update(default_values)

    def assertAllClose(self, actual, desired, rtol=1e-7, atol=0.0):
        np.testing.assert_allclose(actual, desired, rtol=rtol, atol=atol)

    @staticmethod
    def log(level=logging.ERROR, package='curlhvi'):
        log_level(level, package=package)

    @staticmethod
    def main():
        main()
