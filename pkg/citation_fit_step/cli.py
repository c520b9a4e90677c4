# -*- coding: utf-8 -*-

"""The ``citation-fit`` command.

Subcommands
-----------
fit       Fit one family, optionally with zero inflation, and print the table.
compare   Fit all four models and pick the best by AIC.
curves    Write the empirical and fitted CDFs of a dataset for plotting.
simulate  Generate a synthetic dataset with a ground-truth sidecar.
filter    Remove journals with too few cited articles.

The exit status is 0 on success, 1 when a fit is degenerate or did not
converge, and 2 for bad input.
"""

import argparse
from dataclasses import asdict
import configparser
import importlib.resources
import json
import logging
from pathlib import Path
import sys

import citation_fit_step
from . import fitting, ingest, report, sampling
from .distributions import Family, make_params
from .errors import CitationFitError, UsageError
from .zero_inflation import ModelKind, ZeroInflatedModel

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DEGENERATE = 1
EXIT_INPUT = 2


def user_config_path():
    return Path("~/SEAMM/citation_fit.ini").expanduser()


def read_configuration(path=None):
    """The packaged defaults, overridden by the user file and then by path."""
    config = configparser.ConfigParser()
    resources = importlib.resources.files("citation_fit_step") / "data"
    config.read_string((resources / "citation_fit.ini").read_text())

    user = user_config_path()
    if user.exists():
        logger.debug(f"Reading the configuration in {user}")
        config.read(user)
    if path is not None:
        path = Path(path).expanduser()
        if not path.exists():
            raise UsageError(f"The configuration file {path} does not exist.")
        config.read(path)
    return config


def _write(path, text):
    """Write text atomically to path, or to standard output if path is None."""
    if path is None:
        sys.stdout.write(text)
    else:
        ingest.write_atomic(path, text)
        logger.info(f"Wrote {path}")


class CitationFitCLI(object):
    """Parse the command line and run one subcommand.

    Each subcommand method takes the parsed options and returns the exit
    status.
    """

    def __init__(self, logger=logger):
        self.logger = logger
        self.parser = self.create_parser()

    def create_parser(self):
        """The argument parser with a subparser per command."""
        parser = argparse.ArgumentParser(
            prog="citation-fit",
            description="Fit zero-inflated heavy-tailed models to citation counts.",
        )
        parser.add_argument(
            "--version", action="version", version=citation_fit_step.__version__
        )

        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "--log-level",
            default="WARNING",
            choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
            type=str.upper,
            help="The level of informational output, default WARNING.",
        )
        common.add_argument("--out", type=Path, help="Where to write the result.")

        data = argparse.ArgumentParser(add_help=False)
        data.add_argument("--input", type=Path, required=True, help="The data file.")
        data.add_argument(
            "--format", choices=ingest.FORMATS, default="plain", help="The data format."
        )

        search = argparse.ArgumentParser(add_help=False)
        search.add_argument("--config", type=Path, help="An ini file of fit options.")
        search.add_argument("--stride", type=int, help="Step between scanned k.")
        search.add_argument(
            "--refine",
            action=argparse.BooleanOptionalAction,
            default=None,
            help="Rescan around the best k after a strided scan.",
        )
        search.add_argument(
            "--warm-start",
            action=argparse.BooleanOptionalAction,
            default=None,
            help="Start each fit of the scan from the previous one.",
        )
        search.add_argument("--max-iterations", type=int, help="Per simplex run.")
        search.add_argument("--workers", type=int, help="Processes to fit with.")

        subparsers = parser.add_subparsers(dest="command", required=True)

        fit = subparsers.add_parser(
            "fit", parents=[common, data, search], help="Fit one family."
        )
        fit.add_argument(
            "--family", choices=[f.value for f in Family], required=True
        )
        fit.add_argument(
            "--zero-inflated",
            action="store_true",
            help="Also fit the zero-inflated variant.",
        )
        fit.add_argument("--label", default="", help="The subject, for the table.")
        fit.add_argument(
            "--profile", type=Path, help="Write the k-scan of the zero-inflated fit."
        )

        compare = subparsers.add_parser(
            "compare", parents=[common, data, search], help="Compare all four models."
        )
        compare.add_argument("--label", default="", help="The subject, for the table.")

        curves = subparsers.add_parser(
            "curves", parents=[common, data, search], help="Write CDF curves."
        )
        curves.add_argument(
            "--model", type=Path, required=True, help="A fit or simulation JSON file."
        )
        curves.add_argument(
            "--k", type=int, help="Refit the zero-inflated model with k ones removed."
        )

        simulate = subparsers.add_parser(
            "simulate", parents=[common], help="Generate a synthetic dataset."
        )
        simulate.add_argument(
            "--family", choices=[f.value for f in Family], required=True
        )
        simulate.add_argument("--mu", type=float, help="DLN location.")
        simulate.add_argument("--sigma", type=float, help="DLN scale.")
        simulate.add_argument("--alpha", type=float, help="Hooked exponent.")
        simulate.add_argument("--b", type=float, help="Hooked shift, shifted support.")
        simulate.add_argument("--p", type=float, default=0.0, help="Inflation.")
        simulate.add_argument("--n", type=int, required=True, help="Sample size.")
        simulate.add_argument("--seed", type=int, default=0, help="Unsigned 64-bit.")
        simulate.add_argument(
            "--format", choices=ingest.FORMATS, default="plain", help="Output format."
        )
        simulate.add_argument("--journals", type=int, help="Ordinary journals.")
        simulate.add_argument("--magazines", type=int, default=0)
        simulate.add_argument("--magazine-articles", type=int, default=100)
        simulate.add_argument("--magazine-q", type=float, default=0.95)
        simulate.add_argument("--workers", type=int, default=1)

        filter_ = subparsers.add_parser(
            "filter", parents=[common, data], help="Remove magazine-like journals."
        )
        filter_.add_argument(
            "--threshold",
            type=float,
            required=True,
            help="Keep journals with at least this percentage of articles cited.",
        )
        filter_.add_argument(
            "--report", type=Path, help="Write the removed journals as CSV."
        )
        filter_.add_argument(
            "--journal-profile", type=Path, help="Write every journal's profile."
        )

        return parser

    def run(self, argv=None):
        """Parse argv and run the command, returning the exit status."""
        options = self.parser.parse_args(argv)
        logging.basicConfig(
            level=options.log_level,
            format="%(levelname)s %(name)s: %(message)s",
        )

        method = getattr(self, f"cmd_{options.command}")
        try:
            return method(options)
        except CitationFitError as e:
            print(f"citation-fit {options.command}: {e}", file=sys.stderr)
            return EXIT_INPUT
        except OSError as e:
            print(f"citation-fit {options.command}: {e}", file=sys.stderr)
            return EXIT_INPUT

    def search_config(self, options):
        config = read_configuration(options.config)
        if "search" not in config:
            config["search"] = {}
        return fitting.SearchConfig.from_section(
            config["search"],
            stride=options.stride,
            refine=options.refine,
            warm_start=options.warm_start,
            max_iterations=options.max_iterations,
            workers=options.workers,
        )

    def load(self, options):
        return ingest.load(options.input, format=options.format)

    @staticmethod
    def _status(fits):
        for fit in fits:
            if not fit.converged:
                for line in fit.diagnostics:
                    print(f"warning: {fit.kind.value}: {line}", file=sys.stderr)
        if all(fit.converged for fit in fits):
            return EXIT_OK
        return EXIT_DEGENERATE

    def cmd_fit(self, options):
        data = self.load(options)
        config = self.search_config(options)

        base = fitting.fit_base(data, options.family, config)
        fits = [base]
        if options.zero_inflated:
            inflated = fitting.fit_zero_inflated(data, options.family, config)
            fits.append(inflated)
            result = report.fit_to_dict(inflated)
            result["base"] = report.fit_to_dict(base)
        else:
            result = report.fit_to_dict(base)

        if options.profile is not None:
            if not options.zero_inflated:
                raise UsageError("--profile needs --zero-inflated.")
            frame = report.profile_frame(fits[-1])
            _write(options.profile, report.frame_to_csv(frame))

        print(report.fit_table(fits, label=options.label))
        if options.out is not None:
            _write(options.out, report.dumps_json(result))
        return self._status(fits)

    def cmd_compare(self, options):
        data = self.load(options)
        config = self.search_config(options)

        comparison = fitting.fit_all_models(data, config)
        print(report.comparison_table(comparison))
        winner = comparison.results[comparison.winner]
        print(f"Winner: {comparison.winner.value} (AIC {winner.aic:.1f})")
        best = comparison.best_excluding_unimproved()
        if best is not None:
            print(f"Best counting zero inflation only where it improves: {best.value}")
        if comparison.tie_note is not None:
            print(comparison.tie_note)
        for kind, text in comparison.errors.items():
            print(f"warning: {kind.value} could not be fitted: {text}", file=sys.stderr)

        if options.out is not None:
            _write(options.out, report.comparison_to_json(comparison))
        status = self._status(comparison.results.values())
        if len(comparison.errors) > 0:
            status = EXIT_DEGENERATE
        return status

    def cmd_curves(self, options):
        data = self.load(options)
        text = Path(options.model).read_text(encoding="utf-8")
        kind, model = report.model_from_json(text)

        if options.k is not None:
            config = self.search_config(options)
            fit = fitting.fit_fixed_k(data, kind.family, options.k, config)
            kind, model = fit.kind, fit.model

        curve = report.cdf_curve(data, kind, model)
        logger.info(f"K-S statistic of the curve: {curve.max_difference:.6f}")
        _write(options.out, report.curve_to_csv(curve))
        return EXIT_OK

    def cmd_simulate(self, options):
        family = Family(options.family)
        if family is Family.DLN:
            values = (options.mu, options.sigma)
            needed = "--mu and --sigma"
        else:
            values = (options.alpha, options.b)
            needed = "--alpha and --b"
        if None in values:
            raise UsageError(f"The {family.description} needs {needed}.")
        base = make_params(family, values)
        model = ZeroInflatedModel(base=base, p=options.p)

        journals = None
        if options.journals is not None or options.magazines > 0:
            journals = sampling.JournalStructure(
                n_journals=options.journals or 1,
                n_magazines=options.magazines,
                magazine_articles=options.magazine_articles,
                magazine_q=options.magazine_q,
            )
        spec = sampling.SyntheticSpec(
            model=model, n=options.n, seed=options.seed, journals=journals
        )
        if journals is not None and options.format != "csv":
            raise UsageError("Journal labels can only be written in csv format.")

        data = sampling.sample(spec, workers=options.workers)
        kind = ModelKind.of(family, inflated=model.p > 0)
        truth = report.model_to_dict(kind, model)
        truth.update(
            {
                "n": options.n,
                "seed": options.seed,
                "format": options.format,
                "journals": None if journals is None else asdict(journals),
            }
        )

        _write(options.out, ingest.dumps(data, options.format))
        if options.out is not None:
            sidecar = options.out.with_name(options.out.name + ".truth.json")
            _write(sidecar, report.dumps_json(truth))
        else:
            logger.info("Ground truth:\n" + json.dumps(truth, sort_keys=True))
        return EXIT_OK

    def cmd_filter(self, options):
        data = self.load(options)
        filtered, removal = ingest.filter_journals(data, options.threshold)

        frame = report.journal_frame(removal.removed)
        if options.report is not None:
            _write(options.report, report.frame_to_csv(frame))
        if options.journal_profile is not None:
            profiles = ingest.journal_profile(data)
            frame = report.journal_frame(profiles)
            _write(options.journal_profile, report.frame_to_csv(frame))

        print(
            f"Removed {len(removal.removed)} journals, {removal.articles_removed} "
            f"articles ({removal.uncited_removed} uncited), T = {options.threshold}%.",
            file=sys.stderr,
        )
        _write(options.out, ingest.dumps(filtered, "csv"))
        return EXIT_OK


def main(argv=None):
    return CitationFitCLI().run(argv)
