"""
Rich rendering of computation results and verification reports.
"""
import logging

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from nilmult import config
from nilmult.classify.cases import Status

logger = logging.getLogger("dashboard")


def make_console(file=None, stderr=False):
    """
    Console with a fixed width and no colour or highlighting, so the
    same result always prints the same bytes.

    Args:
        file (file-like, optional): Destination, defaults to stdout
        stderr (bool): Write to stderr instead

    Returns:
        rich.console.Console: Configured console
    """
    return Console(
        file=file,
        stderr=stderr,
        width=config.CONSOLE_WIDTH,
        color_system=None,
        highlight=False,
        emoji=False,
        soft_wrap=False,
    )


def _status_text(status):
    style = "green" if status is Status.CONFIRMED else "bold red"
    return Text(status.value, style=style)


def create_witt_table(n, d, value):
    """Single-row table for a Witt count."""
    table = Table(title="Basic commutators")
    table.add_column("weight n", justify="right")
    table.add_column("letters d", justify="right")
    table.add_column("witt(n, d)", justify="right", style="cyan")
    table.add_row(str(n), str(d), str(value))
    return table


def create_hall_table(basis, rendered):
    """
    Table of a Hall basis grouped by weight.

    Args:
        basis (HallBasis): Generated basis
        rendered (list): Per-weight lists of rendered commutators

    Returns:
        rich.table.Table: One row per weight
    """
    table = Table(title=f"Hall basis on {basis.letters} letters up to weight {basis.max_weight}")
    table.add_column("weight", justify="right")
    table.add_column("count", justify="right", style="cyan")
    table.add_column("commutators", overflow="fold")
    for weight, (count, layer) in enumerate(zip(basis.counts(), rendered), start=1):
        table.add_row(str(weight), str(count), Text("; ".join(layer)))
    return table


def create_multiplier_panel(group_text, c, structure_text, order_text):
    """Panel showing one multiplier computation."""
    body = Text()
    body.append("group      ", style="dim")
    body.append(group_text + "\n")
    body.append("class      ", style="dim")
    body.append(f"{c}\n")
    body.append("multiplier ", style="dim")
    body.append(structure_text + "\n", style="bold cyan")
    body.append("order      ", style="dim")
    body.append(order_text)
    return Panel(body, title=f"M^({c})", expand=False)


def create_classification_table(cases):
    """
    Table of ClassificationCases.

    Args:
        cases (list): ClassificationCase records

    Returns:
        rich.table.Table: One row per t
    """
    table = Table(title="Hook-partition classification")
    table.add_column("n", justify="right")
    table.add_column("c", justify="right")
    table.add_column("t", justify="right")
    table.add_column("target", justify="right")
    table.add_column("expected")
    table.add_column("solutions", overflow="fold")
    table.add_column("status")
    for case in cases:
        table.add_row(
            str(case.n),
            str(case.c),
            str(case.t),
            str(case.target_exponent),
            str(case.expected),
            " ".join(str(s) for s in case.solutions) or "-",
            _status_text(case.status),
        )
    return table


def create_exponent_table(n, c, rows, target=None):
    """
    Multiplier exponent of every partition of n.

    Args:
        n (int): Order exponent
        c (int): Nilpotency class
        rows (list): (PGroupPartition, exponent) pairs
        target (int, optional): Exponent to highlight

    Returns:
        rich.table.Table: One row per partition
    """
    table = Table(title=f"Multiplier exponents, n={n}, c={c}")
    table.add_column("partition")
    table.add_column("k", justify="right")
    table.add_column("exponent", justify="right")
    for partition, exponent in rows:
        style = "bold" if target is not None and exponent == target else None
        table.add_row(str(partition), str(partition.k), str(exponent), style=style)
    return table


def create_summary_table(report):
    """Suite name, ranges and confirmed/counterexample counts."""
    table = Table(title=f"Suite {report.suite}")
    table.add_column("field", style="dim")
    table.add_column("value", justify="right")
    for key in sorted(report.parameters):
        table.add_row(key, Text(str(report.parameters[key])))
    summary = report.summary
    table.add_row("cases", str(summary["total"]), end_section=True)
    table.add_row("confirmed", Text(str(summary["confirmed"]), style="green"))
    counter_style = "bold red" if summary["counterexamples"] else "green"
    table.add_row("counterexamples", Text(str(summary["counterexamples"]), style=counter_style))
    return table


def render_report(console, report, show_all=False):
    """
    Print a verification report: the summary table, then the case frame.

    Args:
        console (rich.console.Console): Destination
        report (VerificationReport): Report to print
        show_all (bool): List every case rather than only counterexamples
    """
    console.print(create_summary_table(report))
    frame = report.to_frame(only_counterexamples=not show_all)
    if frame.empty:
        console.print("No counterexamples." if not show_all else "No cases.")
        return
    heading = "All cases:" if show_all else "Counterexamples:"
    console.print(heading)
    console.print(frame.to_string(index=False), markup=False)


def display_error(console, message):
    """
    Display an error message.

    Args:
        console (rich.console.Console): Usually the stderr console
        message (str): Error message to display
    """
    console.print(Panel(Text(message), title="Error", style="bold red"))
