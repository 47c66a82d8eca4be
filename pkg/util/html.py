import dominate
from dominate.tags import meta, h3, h4, table, tr, th, td, pre
import os


class HTML:
    """This HTML class renders check reports into a single HTML file.

     It consists of functions such as <add_header> (add a text header to the HTML file),
     <add_records> (add a table of check records), <add_json> (add a preformatted block) and <save> (save the HTML to the disk).
     It is based on Python library 'dominate', a Python library for creating and manipulating HTML documents using a DOM API.
    """

    def __init__(self, web_dir, title, refresh=0):
        """Initialize the HTML classes

        Parameters:
            web_dir (str) -- a directory that stores the webpage. HTML file will be created at <web_dir>/index.html
            title (str)   -- the webpage name
            refresh (int) -- how often the website refresh itself; if 0; no refreshing
        """
        self.title = title
        self.web_dir = web_dir
        os.makedirs(self.web_dir, exist_ok=True)

        self.doc = dominate.document(title=title)
        if refresh > 0:
            with self.doc.head:
                meta(http_equiv="refresh", content=str(refresh))

    def add_header(self, text, level=3):
        """Insert a header to the HTML file

        Parameters:
            text (str)  -- the header text
            level (int) -- 3 for sections, 4 for subsections
        """
        with self.doc:
            (h3 if level == 3 else h4)(text)

    def add_records(self, records):
        """Add a table with one row per check record; failing rows are highlighted."""
        columns = ['name', 'ok', 'estimate', 'std_error', 'counterexample']
        t = table(border=1, style="table-layout: fixed; border-collapse: collapse;")
        self.doc.add(t)
        with t:
            with tr():
                for col in columns:
                    th(col)
            for record in records:
                style = "" if record.get('ok') else "background-color: #fdd;"
                with tr(style=style):
                    for col in columns:
                        value = record.get(col, '')
                        td(str(value), style="word-wrap: break-word;", valign="top")

    def add_json(self, text):
        with self.doc:
            pre(text)

    def save(self):
        """save the current content to the HMTL file"""
        html_file = os.path.join(self.web_dir, 'index.html')
        with open(html_file, 'wt') as f:
            f.write(self.doc.render())
        return html_file


def save_report_html(report, web_dir):
    """Render a util.report.Report into <web_dir>/index.html."""
    data = report.as_dict()
    html = HTML(web_dir, 'report [%s]' % report.command)
    html.add_header('%s: %s' % (report.command, 'ok' if report.ok else 'FAILED'))
    html.add_records(report.records)
    html.add_header('conventions', level=4)
    html.add_records([{'name': k, 'ok': True, 'estimate': v} for k, v in sorted(data['conventions'].items())])
    html.add_header('configuration', level=4)
    html.add_json('\n'.join('%s: %s' % (k, v) for k, v in sorted(data['config'].items())))
    return html.save()
