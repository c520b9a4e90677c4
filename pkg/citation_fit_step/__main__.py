# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""Fit citation-count models from the command line."""

import sys

from .cli import CitationFitCLI


def run():
    """The ``citation-fit`` command.

    See ``citation-fit --help`` for the subcommands.
    """
    cli = CitationFitCLI()
    sys.exit(cli.run())


if __name__ == "__main__":
    run()
