# -*- coding: utf-8 -*-

"""Unit test package for citation_fit_step."""
