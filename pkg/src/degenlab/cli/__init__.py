# -*- coding: utf-8 -*-

"""
degenlab CLI module
"""
