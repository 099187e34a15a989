# -*- coding: utf-8 -*-
#
#  Copyright 2026 QDTtools developers
#  This file is part of QDTtools.
#
#  QDTtools is free software; you can redistribute it and/or modify
#  it under the terms of the GNU Lesser General Public License as published by
#  the Free Software Foundation; either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  GNU Lesser General Public License for more details.
#
#  You should have received a copy of the GNU Lesser General Public License
#  along with this program; if not, see <https://www.gnu.org/licenses/>.
#
from .containers import *
from .files import *
from .scenarios import *
from .sim import *
from .survey import *
from .verification import verify_all


__all__ = [x for x in locals() if not x.startswith('_') and x not in ('containers', 'files', 'scenarios', 'sim',
                                                                       'survey', 'verification', 'algorithms',
                                                                       'exceptions')]
