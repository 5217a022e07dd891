from celery import shared_task

from .cross import cross_check
from .serializers import CrossCheckReportSerializer


@shared_task
def cross_check_cell(r, s, p, oracle_cap=0):
    """
    Cross-checks one (r, s, p) cell and returns the serialized report.
    """
    report = cross_check(r, s, p, oracle_cap)
    return CrossCheckReportSerializer(report).data
