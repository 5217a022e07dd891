from django.db import models


class Algorithm(models.TextChoices):
    AUTO = 'auto', 'Closed form when one applies, else iima'
    RENAUD = 'renaud', 'Recursive reduction'
    IIMA = 'iima', 'Binomial determinant delta-sequence'
    CLOSEDFORM = 'closedform', 'Closed form only'
    ORACLE = 'oracle', 'Brute-force rank sequence'


class OutputFormat(models.TextChoices):
    TEXT = 'text', 'Text'
    JSON = 'json', 'JSON'
    CSV = 'csv', 'CSV'
