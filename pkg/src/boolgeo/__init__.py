# -*- coding: utf-8 -*-
#
# This file is part of the boolgeo project
#
# Distributed under the terms of the BSD 3-clause new license.
# See LICENSE for more info.

"""Algebraic geometry of equations over Boolean algebras with constants."""
