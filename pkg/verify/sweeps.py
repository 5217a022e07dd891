from celery import group
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from .tasks import cross_check_cell

import logging

logger = logging.getLogger(__name__)

# result backends that live inside one process and never see worker results
IN_PROCESS_BACKENDS = ('cache+memory:', 'memory:')


def grid_cells(rmax, smax, primes):
    """
    Every (r, s, p) with 1 <= r <= rmax, r <= s <= smax and p in primes.
    """
    return [
        (r, s, p)
        for p in sorted(primes)
        for r in range(1, rmax + 1)
        for s in range(r, smax + 1)
    ]


def run_sweep(cells, oracle_cap=0):
    """
    Serialized cross-check reports for every cell, sorted by (r, s, p).

    Cells run in-process when CELERY_TASK_ALWAYS_EAGER is set; otherwise they
    are fanned out to the workers as one group.
    """
    cells = list(cells)
    logger.info('sweeping %d cells (oracle cap %d)', len(cells), oracle_cap)

    if settings.CELERY_TASK_ALWAYS_EAGER:
        reports = [cross_check_cell.apply(args=(*cell, oracle_cap)).get() for cell in cells]
    else:
        if str(settings.CELERY_RESULT_BACKEND).startswith(IN_PROCESS_BACKENDS):
            raise ImproperlyConfigured(
                f'CELERY_RESULT_BACKEND={settings.CELERY_RESULT_BACKEND!r} cannot collect worker results; '
                'set a shared backend or CELERY_TASK_ALWAYS_EAGER=True'
            )
        job = group(cross_check_cell.s(r, s, p, oracle_cap) for r, s, p in cells)
        reports = job.apply_async().get()

    reports.sort(key=lambda report: (report['r'], report['s'], report['p']))
    failures = sum(1 for report in reports if not report['ok'])
    logger.info('swept %d cells, %d failures', len(reports), failures)
    return reports
