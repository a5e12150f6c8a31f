"""
Overview:
    Meta information for linkmix package.
"""

#: Title of this project (should be `linkmix`).
__TITLE__ = 'linkmix'

#: Version of this project.
__VERSION__ = '0.1.0'

#: Short description of the project, will be included in ``setup.py``.
__DESCRIPTION__ = 'Outage, BER, CDF and PDF of mixed RF/FSO fixed-gain relay links, with Monte-Carlo and quadrature oracles.'

#: Author of this project.
__AUTHOR__ = 'narugo1992'

#: Email of the authors'.
__AUTHOR_EMAIL__ = 'narugo992@gmail.com'
