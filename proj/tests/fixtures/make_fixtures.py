#!/usr/bin/env python3
# Copyright (C) 2026 The linkres Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the offline response cache and package corpora.

Run from anywhere; output lands next to this script. The files are
committed, so this only needs re-running after editing the tables below.
"""

import json
import pathlib
import re
import shutil

HERE = pathlib.Path(__file__).resolve().parent
CACHE = HERE / "cache"
API = "https://api.github.com"

FIELDS = [
    "project_uri", "homepage_uri", "wiki_uri", "documentation_uri",
    "mailing_list_uri", "source_code_uri", "bug_tracker_uri",
]

entries = {}


def put(url, status, body=None, headers=None, name=None):
    key = "GET " + url
    assert key not in entries, key
    doc = {"request": key, "status": status, "headers": headers or {}}
    if isinstance(body, str):
        doc["body"] = body
    elif body is not None:
        doc["json"] = body
    entries[key] = (name or re.sub(r"[^a-z0-9]+", "_", url.split("://", 1)[1].lower()).strip("_"), doc)


def repo(owner, name, files, full_name=None):
    put(f"{API}/repos/{owner}/{name}", 200,
        {"full_name": full_name or f"{owner}/{name}", "name": name, "fork": False})
    listing_owner, listing_name = (full_name or f"{owner}/{name}").split("/")
    put(f"{API}/repos/{listing_owner}/{listing_name}/contents", 200,
        [{"name": f, "type": "dir" if "." not in f else "file"} for f in files])


def gem_repo(owner, name, gem=None, extra=()):
    repo(owner, name, ["README.md", "lib", f"{gem or name}.gemspec", *extra])


def gone(owner, name):
    put(f"{API}/repos/{owner}/{name}", 404, {"message": "Not Found"})


def user(login, kind="User", blog="", avatar=True):
    put(f"{API}/users/{login}", 200, {
        "login": login, "type": kind, "blog": blog,
        "avatar_url": f"https://avatars.githubusercontent.com/{login}.png" if avatar else "",
    })


def no_user(login):
    put(f"{API}/users/{login}", 404, {"message": "Not Found"})


def repos_of(login, names, owner=None):
    put(f"{API}/users/{login}/repos?per_page=100&page=1", 200,
        [{"full_name": f"{owner or login}/{n}", "name": n} for n in names])


def page(url, html):
    put(url, 200, html, {"content-type": "text/html; charset=utf-8"})


def pkg(name, **links):
    rec = {"name": name}
    for f in FIELDS:
        rec[f] = links.get(f)
    return rec


# --- explicit repositories (11 packages resolve through them) --------------
gem_repo("brigade", "acts-as-list")
gem_repo("ko", "kiln")
gem_repo("mira", "lumen")
# a/old was renamed to a/new on the host
put(f"{API}/repos/a/old", 301, {"message": "Moved Permanently", "url": f"{API}/repositories/4242"},
    {"location": f"{API}/repositories/4242"})
put(f"{API}/repositories/4242", 200, {"full_name": "a/new", "name": "new", "fork": False})
put(f"{API}/repos/a/new/contents", 200,
    [{"name": n, "type": "file"} for n in ["Gemfile", "renamed-gem.gemspec", "README.md"]])
gem_repo("pax", "pax-core")
gem_repo("orbitals", "ring")
gem_repo("Zeta", "Zed", gem="zed")
gem_repo("quillworks", "quill")
gem_repo("gearbox", "sprocket-kit")
gem_repo("samvera-labs", "hyrax-lite")
gem_repo("linkly", "tinyurl-ruby")

# --- implicit: the futureworkshops walk-through -----------------------------
page("http://www.futureworkshops.com/", """<!doctype html>
<html><head><title>Future Workshops</title></head>
<body>
<nav><a href="/work">Work</a> <a href="/about">About</a></nav>
<p>We build mobile products for enterprises.</p>
<footer><a href="https://twitter.com/FutureWorkshops">Twitter</a>
<a href="mailto:hello@futureworkshops.com">hello@futureworkshops.com</a></footer>
</body></html>
""")
user("futureworkshops", kind="Organization", blog="http://www.futureworkshops.com")
repos_of("futureworkshops", ["fwkit-ios", "notifiable-rails", "notifiable-ios"], owner="FutureWorkshops")
gem_repo("FutureWorkshops", "notifiable-rails")

# --- issues link -------------------------------------------------------------
gem_repo("orbit", "orbit-cli")

# --- github pages ------------------------------------------------------------
gem_repo("nova", "stardust")

# --- deleted -----------------------------------------------------------------
gone("ghost", "vanished")

# --- logo pending: account exists without a back-link ------------------------
page("http://www.acme-widgets.io/", "<html><body><h1>ACME Widgets</h1><p>Contact us.</p></body></html>\n")
user("acme-widgets", kind="Organization", blog="")
repos_of("acme-widgets", ["gizmo", "docs"])
gem_repo("acme-widgets", "gizmo")

# --- conflict: two explicit links, both valid --------------------------------
gem_repo("forkone", "twin")
gem_repo("forktwo", "twin")

# --- gemspec only below the root ---------------------------------------------
repo("monorepo", "deep", ["README.md", "gems", "Rakefile"])

# --- homepage scrape ---------------------------------------------------------
page("https://blog.example.org/", """<html><body>
<p>Source lives at <a href="https://github.com/acme/widget">GitHub</a>.</p>
<p>Also see https://github.com/acme for other work.</p>
</body></html>
""")
gem_repo("acme", "widget")

# --- extras used only by unit tests ------------------------------------------
page("http://somehost.org/", "<html><body>nothing here</body></html>\n")
no_user("somehost")
user("plainuser", kind="User", blog="")
repos_of("emptyhand", [])
user("emptyhand")
repos_of("casey", ["Foo", "bar"])
repo("hollow", "empty", [])
put(f"{API}/repos/hollow/void", 200, {"full_name": "hollow/void", "name": "void"})
put(f"{API}/repos/hollow/void/contents", 404, {"message": "This repository is empty."})
put("http://missing.example.com/", 404, "<html>not found</html>", {"content-type": "text/html"})
for i in range(6):
    put(f"http://loop.example.com/{i}", 302, "", {"location": f"/{i + 1}"}, name=f"loop_{i}")
put("http://loop.example.com/6", 200, "end", {"content-type": "text/plain"}, name="loop_6")

corpus = [
    pkg("acts-as-list", source_code_uri="https://github.com/brigade/acts-as-list"),
    pkg("kiln", homepage_uri="https://github.com/ko/kiln.git"),
    pkg("lumen", homepage_uri="https://github.com/mira/lumen/", documentation_uri="http://php.net/"),
    pkg("renamed-gem", source_code_uri="https://github.com/a/old"),
    pkg("pax-core", source_code_uri="https://github.com/pax/pax-core",
        homepage_uri="https://github.com/pax/mono/tree/master/pax-core",
        documentation_uri="https://www.google.com"),
    pkg("ring", homepage_uri="https://github.com/orbitals/ring",
        bug_tracker_uri="https://github.com/orbitals/ring/issues"),
    pkg("zed", source_code_uri="https://github.com/Zeta/Zed"),
    pkg("quill", homepage_uri="https://github.com/quillworks/quill",
        source_code_uri="https://github.com/quillworks/quill"),
    pkg("sprocket-kit", source_code_uri="http://github.com/gearbox/sprocket-kit",
        wiki_uri="https://github.com/gearbox/sprocket-kit/wiki"),
    pkg("hyrax-lite", source_code_uri="https://github.com/samvera-labs/hyrax-lite",
        wiki_uri="https://github.com/samvera-labs/hyrax-lite/blob/main/CHANGELOG.md",
        project_uri="https://rubygems.org/gems/hyrax-lite"),
    pkg("tinyurl-ruby", homepage_uri="https://github.com/linkly/tinyurl-ruby",
        mailing_list_uri="www.google.com"),
    pkg("notifiable-rails", homepage_uri="http://www.futureworkshops.com"),
    pkg("orbit-cli", bug_tracker_uri="https://github.com/orbit/orbit-cli/issues/"),
    pkg("stardust", homepage_uri="https://nova.github.io/stardust"),
    pkg("vanished", source_code_uri="https://github.com/ghost/vanished"),
    pkg("subgem", homepage_uri="https://github.com/big/mono/tree/master/subgem",
        documentation_uri="http://php.net/"),
    pkg("gizmo", homepage_uri="http://www.acme-widgets.io"),
    pkg("twin", homepage_uri="https://github.com/forkone/twin",
        source_code_uri="https://github.com/forktwo/twin"),
    pkg("deep", source_code_uri="https://github.com/monorepo/deep"),
    pkg("widget", homepage_uri="https://blog.example.org/"),
]
assert len(corpus) == 20


def jsonl(path, rows):
    path.write_text("".join(json.dumps(r) + "\n" for r in rows))


def main():
    if CACHE.exists():
        shutil.rmtree(CACHE)
    CACHE.mkdir()
    names = set()
    for key in sorted(entries):
        name, doc = entries[key]
        assert name not in names, name
        names.add(name)
        (CACHE / f"{name}.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    jsonl(HERE / "corpus.jsonl", corpus)
    jsonl(HERE / "notifiable.jsonl", [corpus[11]])


if __name__ == "__main__":
    main()
