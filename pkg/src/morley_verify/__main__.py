from __future__ import annotations

import sys

from .cli_report import main

sys.exit(main())
