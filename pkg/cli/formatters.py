"""
Human-readable run summary
"""


def format_solutions_as_markdown(solutions: dict) -> str:
    """Table of alpha* per operating point"""
    if not solutions:
        return ""
    lines = ["| SNR (dB) | M | alpha* | iterations | method |", "|---|---|---|---|---|"]
    for (snr, M), solution in sorted(solutions.items()):
        lines.append(
            f"| {snr:g} | {M} | {solution.alpha_star:.6f} | {solution.iterations} | {solution.method.value} |"
        )
    return "\n".join(lines)


def format_summary_as_markdown(state: dict) -> str:
    """
    Summary of a finished run for the log
    """
    config = state.get("config")
    lines = [f"## {config.kind.value if config else 'experiment'}\n"]

    if state.get("success"):
        lines.append(f"**Rows written:** {len(state.get('rows') or [])}")
        lines.append(f"**CSV:** {state.get('csv_path')}")
        lines.append(f"**Metadata:** {state.get('meta_path')}")
    else:
        lines.append(f"**Failed (exit {state.get('exit_code')}):** {state.get('error_message')}")

    wall = state.get("wall_time")
    if wall is not None:
        lines.append(f"**Wall time:** {wall:.2f}s")

    table = format_solutions_as_markdown(state.get("solutions") or {})
    if table:
        lines.append("")
        lines.append(table)
    return "\n".join(lines)
