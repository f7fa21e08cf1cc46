"""
Workbench service round trip
============================

Spins up the HTTP API in-process, creates an annotation the way the browser
workbench does, watches the revision and live metrics move, then deletes it
and confirms the metrics return to their prior values.
"""

import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from tsdlab import builtin_tsd_scheme, load_annotations, load_corpus
from tsdlab.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

scheme = builtin_tsd_scheme()
corpus = load_corpus(FIXTURES / "corpus.json")
aset = load_annotations(FIXTURES / "annotations.jsonl", scheme)
store = Path(tempfile.mkdtemp(prefix="tsdlab-demo-")) / "annotations.jsonl"

app = create_app(corpus, scheme, aset, annotations_path=store)
client = TestClient(app)

doc_id = "khosla-2017-scary"
before = client.get(f"/documents/{doc_id}/metrics").json()["metrics"]
print(f"{doc_id}: tsda={before['tsda']:.2f} tsdb={before['tsdb']:.3f} "
      f"at revision {client.get('/documents').json()['revision']}")

resp = client.post("/annotations", json={
    "doc_id": doc_id, "start": 10, "end": 64, "code": "CT-UF", "annotator": "demo",
})
body = resp.json()
print(f"POST /annotations -> {resp.status_code}, revision {body['revision']}, "
      f"tsda now {body['metrics']['tsda']:.2f}")

# The same payload again is an exact duplicate.
print(f"repeat POST -> {client.post('/annotations', json={'doc_id': doc_id, 'start': 10, 'end': 64, 'code': 'CT-UF', 'annotator': 'demo'}).status_code} (duplicate)")

key = body["annotation"]["key"]
resp = client.delete(f"/annotations/{key}")
after = resp.json()["metrics"]
print(f"DELETE /annotations/{key} -> {resp.status_code}, revision {resp.json()['revision']}")
print(f"metrics restored: {after['tsda'] == before['tsda'] and after['tsdb'] == before['tsdb']}")

views = {view: len(client.get(f"/analysis/{view}").content) for view in
         ("spectrum", "dynamics", "patterns", "stats")}
print(f"analysis views served (bytes): {views}")
print(f"annotations persisted at {store}")
