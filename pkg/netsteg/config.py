# Copyright (C) 2026, the netsteg developers
#
# This file is part of netsteg.
#
# netsteg is free software: you can redistribute it and/or modify it under the
# terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or (at your option) any later
# version.
#
# netsteg is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more
# details.
#
# You should have received a copy of the GNU General Public License along with
# netsteg. If not, see <http://www.gnu.org/licenses/>.

"""
Configuration files for the netsteg program. A configuration file is plain
Python, e.g. simulations/bind.cfg.py:

    algo   = 'bind'
    cover  = 'ddi.csv'
    r      = '0.7:1.0:0.05'
    trials = 100

It is executed in its own namespace dict (a simplified sandbox, not an
unbreakable one), and the recognised names are read from there. Values given
on the command line take precedence over the file, and the file over the
NETSTEG_PASSWORD environment variable.
"""

import os
import types
import logging

from netsteg.edgelist import NetstegError
from netsteg.keyperm import StegoKey

logger = logging.getLogger(__name__)

PASSWORD_ENV = 'NETSTEG_PASSWORD'

KNOWN_NAMES = ('algo', 'cover', 'r_values', 'r', 'trials', 'seed', 'framing',
               'out', 'format', 'password', 'delimiter', 'has_header', 'bias',
               'ref')

class ConfigError(NetstegError, ValueError):
    pass

def load_config(fname):
    'Executes the configuration file fname and returns its namespace.'
    params = {}
    try:
        with open(fname, 'rb') as f:
            code = compile(f.read(), fname, 'exec')
        exec(code, params)
    except OSError as e:
        raise ConfigError("Cannot read configuration file: {}".format(e))
    except Exception as e:
        raise ConfigError("Error in configuration file {}: {}: {}"
                          .format(fname, type(e).__name__, e))
    params.pop('__builtins__', None)
    return params

def _is_setting(name, value):
    return not (name.startswith('_') or callable(value)
                or isinstance(value, types.ModuleType))

class Settings(object):
    """
    Settings of one invocation, merged from command line flags and an
    optional configuration namespace:

        s = Settings(load_config('bind.cfg.py'))
        algo = s.get('algo', args.algo, 'bind')

    A flag that is None counts as not given.
    """

    def __init__(self, params=None, source=None):
        self.params = dict(params or {})
        self.source = source
        unknown = sorted(k for k, v in self.params.items()
                         if k not in KNOWN_NAMES and _is_setting(k, v))
        if unknown:
            logger.warning("Unknown names in %s: %s", source, ', '.join(unknown))

    @classmethod
    def from_file(cls, fname=None):
        if fname is None:
            return cls()
        return cls(load_config(fname), fname)

    def get(self, name, flag=None, default=None):
        value = self.params.pop(name, default)
        return value if flag is None else flag

    def require(self, name, flag=None):
        value = self.get(name, flag)
        if value is None:
            raise ConfigError("Missing required setting '{}' (give --{} or set "
                              "it in a configuration file)"
                              .format(name, name.replace('_', '-')))
        return value

    def password(self, flag=None, environ=None):
        """
        Returns the StegoKey of the password from the flag, the configuration
        file or the environment. A number in the configuration file is taken
        as the digits it is written with, so password = 1234 in a file and
        --password 1234 give the same key.
        """
        environ = os.environ if environ is None else environ
        value = self.get('password', flag)
        if value is None:
            value = environ.get(PASSWORD_ENV)
        if value is None:
            raise ConfigError("No password given (use --password or set {})"
                              .format(PASSWORD_ENV))
        if isinstance(value, int) and not isinstance(value, bool):
            value = str(value)
        if not isinstance(value, (str, bytes)):
            raise ConfigError("The password must be a string, not {}"
                              .format(type(value).__name__))
        logger.info("Password supplied: yes")
        return StegoKey(value)
