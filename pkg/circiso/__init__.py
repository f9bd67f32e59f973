#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging

try:
    from .util import *  # noqa: F403
    from .config import *  # noqa: F403
    from .modring import *  # noqa: F403
    from .circulant import *  # noqa: F403
    from .adam import *  # noqa: F403
    from .theta import *  # noqa: F403
    from .classification import *  # noqa: F403
    from .classify import *  # noqa: F403
    from .oracle import *  # noqa: F403
    from .enumeration import *  # noqa: F403
    from .family import *  # noqa: F403
    from .fixtures import *  # noqa: F403
    from .tools import *  # noqa: F403
except ImportError as e:
    logging.error(
        "Error, trying to import dependencies. Should only occur upon package installation",
        exc_info=e,
    )

VERSION = (0, 1, 0)

__version__ = ".".join([str(i) for i in VERSION])
__author__ = "circiso contributors"
__author_email__ = ""
__copyright__ = "Copyright (C) 2026 circiso contributors"
__license__ = "MIT"
__url__ = ""
