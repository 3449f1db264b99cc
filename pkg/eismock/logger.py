# -*- coding: utf-8 -*-
"""The library logger"""

import os
import logging

LOGLEVEL = os.environ.get('EISMOCK_LOGLEVEL') if os.environ.get('EISMOCK_LOGLEVEL') else 'CRITICAL'

levels_mapping = { 50: 'CRITICAL',
                   40: 'ERROR',
                   30: 'WARNING',
                   20: 'INFO',
                   10: 'DEBUG',
                    0: 'NOTSET'}


def setup(level=LOGLEVEL, force=False):
    """Setup the eismock logger at the given level. If the logger is already set up with a
    different level a warning is issued, unless force is set, in which case the new level is applied."""
    eismock_logger = logging.getLogger('eismock')
    level = level.upper()

    handler = None
    for candidate in eismock_logger.handlers:
        if candidate.get_name() == 'eismock_handler':
            handler = candidate
            break

    if handler is None:
        handler = logging.StreamHandler()
        handler.set_name('eismock_handler')
        handler.setLevel(level=level)
        handler.setFormatter(logging.Formatter('[%(levelname)s] %(name)s: %(message)s'))
        eismock_logger.addHandler(handler)
        eismock_logger.setLevel(level=level)

    elif force:
        handler.setLevel(level=level)
        eismock_logger.setLevel(level=level)

    elif levels_mapping[handler.level] != level:
        eismock_logger.warning('You tried to setup the logger with level "{}" but it is already configured with level "{}". Use force=True to force reconfiguring it.'.format(level, levels_mapping[handler.level]))

    return eismock_logger
