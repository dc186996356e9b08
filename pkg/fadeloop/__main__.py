# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
import sys
from .cli import main

if __name__ == "__main__":
    sys.exit(main())
