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
from csv import Error as CSVError, reader
from io import StringIO, TextIOWrapper
from logging import info
from math import isfinite
from pathlib import Path
from typing import Iterator, List, Union
from ..containers import OrderedContingencyTable
from ..containers.tables import positions, value_kinds
from ..exceptions import ParseError


columns = ('question_id', 'position', 'category', 'value', 'value_kind', 'sample_size')


class TablesRead:
    """
    Survey tables CSV reader. One row per category::

        question_id,position,category,value,value_kind,sample_size
        overall_satisfaction,first,Satisfied,17,percent,766

    Header row is required. Rows of one table are collected by (question_id, position) in order of appearance.
    Works similar to opened file object. Support `with` context manager.
    On initialization accept opened in text mode file, string path to file or pathlib.Path object.
    """
    def __init__(self, file: Union[str, Path, TextIOWrapper, StringIO]):
        if isinstance(file, str):
            self._file = open(file, encoding='utf-8', newline='')
            self.__is_buffer = False
        elif isinstance(file, Path):
            self._file = file.open(encoding='utf-8', newline='')
            self.__is_buffer = False
        elif isinstance(file, (TextIOWrapper, StringIO)):
            self._file = file
            self.__is_buffer = True
        else:
            raise TypeError('invalid file. TextIOWrapper, StringIO subclasses possible')
        self.__tables = None

    def close(self, force=False):
        """
        Close opened file.

        :param force: Force closing of externally opened file or buffer.
        """
        if not self.__is_buffer or force:
            self._file.close()

    def __enter__(self):
        return self

    def __exit__(self, _type, value, traceback):
        self.close()

    def __iter__(self) -> Iterator[OrderedContingencyTable]:
        return iter(self.read())

    def read(self) -> List[OrderedContingencyTable]:
        """
        Parse whole file.

        :return: list of tables with validated sums.
        """
        if self.__tables is None:
            self.__tables = self.__parse()
        return self.__tables

    def __parse(self):
        rows = reader(self._file)
        try:
            header = next(rows, None)
            if header is None:
                raise ParseError(1, 'empty file')
            if tuple(x.strip() for x in header) != columns:
                raise ParseError(1, f'header should be {",".join(columns)}')

            groups = {}
            for row in rows:
                line = rows.line_num
                if not any(x.strip() for x in row):
                    continue
                if len(row) != len(columns):
                    raise ParseError(line, f'{len(columns)} columns expected, {len(row)} found')
                question, position, category, value, kind, size = (x.strip() for x in row)
                if not question:
                    raise ParseError(line, 'empty question_id')
                if position not in positions:
                    raise ParseError(line, f'position should be one of {positions}')
                if not category:
                    raise ParseError(line, 'empty category')
                if kind not in value_kinds:
                    raise ParseError(line, f'value_kind should be one of {value_kinds}')
                try:
                    value = float(value)
                except ValueError:
                    raise ParseError(line, f'invalid value {value!r}')
                if not isfinite(value) or value < 0:
                    raise ParseError(line, f'value should be non negative number: {value}')
                try:
                    size = int(size)
                except ValueError:
                    raise ParseError(line, f'invalid sample_size {size!r}')

                key = question, position
                if key in groups:
                    group = groups[key]
                    if group['kind'] != kind or group['size'] != size:
                        raise ParseError(line, f'value_kind and sample_size differ within {question}/{position}')
                    group['categories'].append((category, value))
                else:
                    groups[key] = {'kind': kind, 'size': size, 'categories': [(category, value)]}
        except CSVError as e:
            raise ParseError(rows.line_num, str(e))

        if not groups:
            raise ParseError(rows.line_num or 1, 'no tables')
        tables = [OrderedContingencyTable(q, p, g['categories'], g['size'], g['kind']) for (q, p), g in groups.items()]
        info(f'{len(tables)} survey tables parsed')
        return tables


def ingest_tables(file: Union[str, Path, TextIOWrapper, StringIO]) -> List[OrderedContingencyTable]:
    """
    Read survey tables file.
    """
    with TablesRead(file) as f:
        return f.read()


__all__ = ['TablesRead', 'ingest_tables']
