# -*- coding: utf-8 -*-

import sys

from groupiepy.cli import main

sys.exit(main())
