# -*- coding: utf-8 -*-
#
#  Anticanonical heights of Galois algebra pairs (python-galoisheight)
#
#  Copyright (C) 2026 python-galoisheight developers
#
#  This file is part of python-galoisheight
#
#  This program is free software; you can redistribute it and/or
#  modify it under the terms of the MIT License.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  MIT License for more details.
#
#  You should have received a copy of the MIT License along with this
#  program; if not, see <https://opensource.org/licenses/MIT>.

"""
galoisheight - Exact heights of Galois algebra pairs
"""

import logging
import os
from logging.handlers import SysLogHandler

from .exact import HNFBasis, RationalMatrix, generalized_index, hnf
from .exact import complex_roots, poly_discriminant
from .groups import FiniteGroup, GroupAlgebraElement
from .fields import FieldElement, GaloisAction, NumberField
from .lattices import FractionalIdeal, KLattice, Order
from .pairs import GAlgebra, Pair, SearchBox, selfdual_search
from .heights import HeightReport, height, standard_projective_height


#: Current version of the package as :class:`str`.
__version__ = "1.0.0"

LOG_LEVELS = [
    logging.ERROR,
    logging.WARN,
    logging.INFO,
    logging.DEBUG
]


def basic_logger(name=None, clevel=2, slevel=None):
    """Configure a basic logger

    :param str name: Logger name
    :param int clevel: Console log level
    :param int slevel: Syslog log level, syslog is left out when None or
                       when no local syslog socket exists
    :return: Logger object
    """
    logger = logging.getLogger(name)
    logger.setLevel(LOG_LEVELS[clevel])
    fmt = logging.Formatter('%(name)s %(levelname)s: %(message)s')
    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(fmt)
    logger.addHandler(stream_handler)
    if slevel is not None and os.path.exists('/dev/log'):
        syslog_handler = SysLogHandler(address='/dev/log')
        syslog_handler.setFormatter(fmt)
        syslog_handler.setLevel(LOG_LEVELS[slevel])
        logger.addHandler(syslog_handler)
    return logger
