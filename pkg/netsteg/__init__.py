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

from netsteg.edgelist import *
from netsteg.classify import *
from netsteg.keyperm import *
from netsteg.codec import *
from netsteg.bynis import *
from netsteg.stats import *
from netsteg.simulate import *
from netsteg.config import *
