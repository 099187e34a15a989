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
"""
Survey tables files reader and bundled Table 1 data of question order experiment.
"""
from lazy_object_proxy import Proxy
from pathlib import Path
from .CSVrw import *


table1_path = Path(__file__).parent / 'data' / 'table1.csv'


def _table1():
    return ingest_tables(table1_path)


table1 = Proxy(_table1)  # overall satisfaction and presidential approval in both orders


__all__ = ['TablesRead', 'ingest_tables', 'table1', 'table1_path']
