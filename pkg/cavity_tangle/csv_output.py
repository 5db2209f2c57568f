import csv
import logging

logger = logging.getLogger(__name__)


def _number(value):
    # repr of a float is its shortest round-trip decimal
    return repr(float(value))


def _open(path):
    return open(path, "w", newline="", encoding="utf-8")


def write_trajectory(path, points):
    with _open(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["t", "purity", "concurrence"])
        for point in points:
            writer.writerow([_number(point.t), _number(point.purity), _number(point.concurrence)])
    logger.info("wrote %d trajectory rows to %s", len(points), path)


def write_scan(path, grid):
    header = ["J", "t", "purity"]
    if grid.concurrence is not None:
        header.append("concurrence")
    rows = 0
    with _open(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for j_index, ising in enumerate(grid.j_values):
            for t_index, t in enumerate(grid.t_values):
                row = [_number(ising), _number(t), _number(grid.purity[j_index, t_index])]
                if grid.concurrence is not None:
                    row.append(_number(grid.concurrence[j_index, t_index]))
                writer.writerow(row)
                rows += 1
    logger.info("wrote %d scan rows to %s", rows, path)


def write_envelope(path, mode, report):
    with _open(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["mode", "max_excess", "uncovered"])
        writer.writerow([mode, _number(report.max_excess), report.uncovered])
    logger.info("wrote envelope report to %s", path)
