# -*- coding: utf-8 -*-

"""Loading, shifting, summarising and filtering citation-count data.

Raw citation counts may be zero, which the discretised lognormal cannot handle,
so every count is shifted by +1 on the way in. A :class:`CountDataset` is always
shifted; :meth:`CountDataset.raw_counts` gives the original counts back.
"""

from dataclasses import dataclass
from functools import cached_property
import csv
import io
import logging
import os
from pathlib import Path
import re
import tempfile

import numpy as np
import pandas as pd

from .errors import DomainError, ParseError, UsageError

logger = logging.getLogger(__name__)

FORMATS = ("plain", "csv")

# Plain ASCII base-10 digits; no sign, underscores or other scripts.
COUNT_PATTERN = re.compile("[0-9]+")


@dataclass(frozen=True, eq=False)
class CountDataset:
    """Shifted citation counts, with optional journal labels.

    Attributes
    ----------
    counts : numpy.ndarray
        The shifted counts, all >= 1, as a read-only int64 array.
    labels : tuple of str, optional
        The journal of each entry. An empty string marks an unlabelled entry.
    shifted : bool
        Always True; guards against shifting twice.
    """

    counts: np.ndarray
    labels: tuple = None
    shifted: bool = True

    def __post_init__(self):
        counts = np.array(self.counts, dtype=np.int64).reshape(-1)
        if counts.size > 0 and counts.min() < 1:
            raise DomainError(
                "Shifted counts must be >= 1; use CountDataset.from_raw for raw counts."
            )
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != counts.size:
                raise DomainError(
                    f"There are {len(labels)} journal labels for {counts.size} counts."
                )
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_raw(cls, raw, labels=None):
        """Create a dataset from raw, unshifted counts (which may include 0)."""
        if isinstance(raw, CountDataset):
            raise UsageError("The counts are already shifted.")
        raw = np.array(raw, dtype=np.int64).reshape(-1)
        if raw.size > 0 and raw.min() < 0:
            raise DomainError("Citation counts cannot be negative.")
        return cls(counts=raw + 1, labels=labels)

    def __len__(self):
        return int(self.counts.size)

    @property
    def n_total(self):
        """N, the number of entries."""
        return int(self.counts.size)

    @cached_property
    def ones(self):
        """r, the number of entries equal to 1 (uncited articles)."""
        return int(np.count_nonzero(self.counts == 1))

    @property
    def has_labels(self):
        return self.labels is not None

    def raw_counts(self):
        """The original counts, without the +1 shift."""
        return self.counts - 1

    @cached_property
    def value_counts(self):
        """The distinct values and how often each occurs, as two arrays."""
        values, counts = np.unique(self.counts, return_counts=True)
        return values, counts

    def truncated_value_counts(self, k):
        """The distinct values and frequencies with k of the ones removed."""
        if not 0 <= k <= self.ones:
            raise DomainError(f"Cannot remove {k} ones, there are only {self.ones}.")
        values, counts = self.value_counts
        if k == 0:
            return values, counts
        counts = counts.copy()
        counts[0] -= k
        if counts[0] == 0:
            return values[1:], counts[1:]
        return values, counts

    def subset(self, mask):
        """A new dataset with the entries selected by a boolean mask."""
        mask = np.asarray(mask, dtype=bool)
        labels = None
        if self.labels is not None:
            labels = tuple(label for label, keep in zip(self.labels, mask) if keep)
        return CountDataset(counts=self.counts[mask], labels=labels)


@dataclass(frozen=True)
class DatasetSummary:
    """The per-dataset columns of the fit tables, on raw counts."""

    n_total: int
    uncited: int
    max: int
    mean: float
    median: float


@dataclass(frozen=True)
class JournalProfile:
    """Citation profile of the articles of one journal."""

    journal: str
    articles: int
    uncited: int

    @property
    def cited(self):
        return self.articles - self.uncited

    @property
    def cited_fraction(self):
        return self.cited / self.articles


@dataclass(frozen=True)
class FilterReport:
    """What the journal threshold filter removed."""

    threshold: float
    removed: tuple
    articles_removed: int
    uncited_removed: int


def _decode(raw):
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw[: e.start].count(b"\n") + 1
        raise ParseError("the input is not valid UTF-8 text", line=line) from None


def _open_text(source):
    """Read all the text from a path or an open stream."""
    if hasattr(source, "read"):
        text = source.read()
        if isinstance(text, bytes):
            text = _decode(text)
        return text
    return _decode(Path(source).read_bytes())


def _parse_count(token, line):
    token = token.strip()
    if not COUNT_PATTERN.fullmatch(token):
        raise ParseError(f"'{token}' is not an integer citation count", line=line)
    return int(token)


def _load_plain(text):
    raw = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if line.strip() == "":
            continue
        raw.append(_parse_count(line, line_no))
    if len(raw) == 0:
        raise ParseError("the input contains no citation counts", line=1)
    return CountDataset.from_raw(raw)


def _record_lines(text):
    """The line on which each CSV record after the header starts.

    Quoted fields may span lines, so the physical line of a record is taken
    from the csv reader rather than from its position in the frame.
    """
    reader = csv.reader(io.StringIO(text))
    starts = []
    start = 1
    try:
        for row in reader:
            if not (len(row) <= 1 and "".join(row).strip() == ""):
                starts.append(start)
            start = reader.line_num + 1
    except csv.Error:
        return []
    return starts[1:]


def _load_csv(text):
    try:
        df = pd.read_csv(
            io.StringIO(text), dtype=str, keep_default_na=False, skip_blank_lines=True
        )
    except pd.errors.EmptyDataError:
        raise ParseError("the input is empty", line=1)
    except pd.errors.ParserError as e:
        raise ParseError(f"malformed CSV: {e}")

    columns = {str(c).strip(): c for c in df.columns}
    if "citations" not in columns:
        raise ParseError("the header has no 'citations' column", line=1)
    if len(df) == 0:
        raise ParseError("the input contains no citation counts", line=2)

    lines = _record_lines(text)
    if len(lines) != len(df):
        # Fall back to one record per line after the header.
        lines = range(2, len(df) + 2)
    raw = [
        _parse_count(token, line)
        for token, line in zip(df[columns["citations"]], lines)
    ]
    labels = None
    if "journal" in columns:
        labels = [label.strip() for label in df[columns["journal"]]]
    return CountDataset.from_raw(raw, labels=labels)


def load(source, format="plain"):
    """Read raw citation counts and shift them by +1.

    Parameters
    ----------
    source : str, pathlib.Path or file-like
        Where to read from.
    format : str
        "plain" for one nonnegative integer per line, or "csv" for a file with a
        header, a required ``citations`` column and an optional ``journal``
        column. Other columns are ignored.

    Returns
    -------
    CountDataset
    """
    if format not in FORMATS:
        raise UsageError(f"Unknown input format '{format}', use one of {FORMATS}.")
    text = _open_text(source)
    if format == "plain":
        data = _load_plain(text)
    else:
        data = _load_csv(text)
    logger.info(f"Read {data.n_total} citation counts, {data.ones} uncited.")
    return data


def write_atomic(path, text):
    """Write text to path via a temporary file and a rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as out:
            out.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def dumps(data, format="plain"):
    """The raw counts of a dataset as plain or csv text."""
    if format not in FORMATS:
        raise UsageError(f"Unknown output format '{format}', use one of {FORMATS}.")
    raw = data.raw_counts()
    if format == "plain":
        return "".join(f"{value}\n" for value in raw)
    df = pd.DataFrame({"citations": raw})
    if data.has_labels:
        df["journal"] = list(data.labels)
    return df.to_csv(index=False, lineterminator="\n")


def save(data, path, format="plain"):
    """Write the raw (unshifted) counts so that :func:`load` reads them back."""
    write_atomic(path, dumps(data, format))


def summarize(data):
    """N, the uncited count and max/mean/median of the raw counts."""
    if data.n_total == 0:
        raise DomainError("Cannot summarise an empty dataset.")
    raw = data.raw_counts()
    return DatasetSummary(
        n_total=data.n_total,
        uncited=data.ones,
        max=int(raw.max()),
        mean=float(raw.mean()),
        median=float(np.median(raw)),
    )


def journal_profile(data):
    """The articles and uncited articles of each labelled journal.

    Unlabelled entries are not included. Journals are listed in order of first
    appearance.
    """
    if not data.has_labels:
        raise UsageError("The dataset has no journal labels.")
    df = pd.DataFrame({"journal": list(data.labels), "uncited": data.counts == 1})
    df = df[df["journal"] != ""]
    grouped = df.groupby("journal", sort=False)["uncited"].agg(["size", "sum"])
    return [
        JournalProfile(
            journal=str(name), articles=int(row["size"]), uncited=int(row["sum"])
        )
        for name, row in grouped.iterrows()
    ]


def filter_journals(data, t_percent):
    """Remove every journal with fewer than T% of its articles cited.

    Journals are removed all-or-nothing and unlabelled articles are always kept.

    Parameters
    ----------
    data : CountDataset
        A dataset with journal labels.
    t_percent : float
        The cited-articles threshold T, in [0, 100].

    Returns
    -------
    (CountDataset, FilterReport)
    """
    if not data.has_labels:
        raise UsageError("Filtering by journal needs a 'journal' column in the data.")
    if not 0.0 <= t_percent <= 100.0:
        raise DomainError(f"The threshold must be between 0 and 100, not {t_percent}.")

    threshold = t_percent / 100.0
    removed = [j for j in journal_profile(data) if j.cited_fraction < threshold]
    names = {j.journal for j in removed}
    mask = np.array([label not in names for label in data.labels], dtype=bool)

    report = FilterReport(
        threshold=float(t_percent),
        removed=tuple(removed),
        articles_removed=sum(j.articles for j in removed),
        uncited_removed=sum(j.uncited for j in removed),
    )
    if len(removed) > 0:
        logger.info(
            f"Removed {len(removed)} journals with {report.articles_removed} articles, "
            f"{report.uncited_removed} of them uncited, at T={t_percent}%."
        )
    return data.subset(mask), report
