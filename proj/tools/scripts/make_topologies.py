#!/usr/bin/env python3
# Copyright 2026 The eonsim Authors
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
"""Regenerates the bundled topology files under data/topologies.

NSFNET uses the widely circulated 14-node link lengths. The other networks
are rebuilt from node coordinates: length = great-circle distance times a
route factor, rounded to 10 km. They reproduce node/link counts and rough
geography, not any particular published length table.
"""

import json
import math
import os
import sys

SCHEMA = "eonsim.topology/1"


def great_circle_km(a, b):
    lat1, lon1 = map(math.radians, a)
    lat2, lon2 = map(math.radians, b)
    h = (math.sin((lat2 - lat1) / 2) ** 2 +
         math.cos(lat1) * math.cos(lat2) * math.sin((lon2 - lon1) / 2) ** 2)
    return 2 * 6371.0 * math.asin(math.sqrt(h))


def from_coords(coords, edges, factor):
    links = []
    for a, b in edges:
        km = great_circle_km(coords[a], coords[b]) * factor
        links.append((a, b, max(10, int(round(km / 10.0)) * 10)))
    return links


def document(name, nodes, links, fiber_mode="dual", slots=100):
    return {
        "schema": SCHEMA,
        "name": name,
        "fiber_mode": fiber_mode,
        "slots_per_fiber": slots,
        "nodes": nodes,
        "links": [{"a": a, "b": b, "length_km": km} for a, b, km in links],
    }


NSFNET = [
    ("1", "2", 2100), ("1", "3", 3000), ("1", "8", 4800), ("2", "3", 1200),
    ("2", "4", 1500), ("3", "6", 3600), ("4", "5", 1200), ("4", "11", 3900),
    ("5", "6", 2400), ("5", "7", 1200), ("5", "9", 2100), ("6", "10", 2100),
    ("6", "14", 3600), ("7", "8", 1500), ("8", "9", 1500), ("9", "10", 1500),
    ("9", "12", 600), ("9", "13", 600), ("11", "12", 1200), ("11", "13", 1500),
    ("12", "14", 600), ("13", "14", 300),
]

COST239_COORDS = {
    "Copenhagen": (55.68, 12.57), "London": (51.51, -0.13),
    "Amsterdam": (52.37, 4.90), "Berlin": (52.52, 13.40),
    "Brussels": (50.85, 4.35), "Luxembourg": (49.61, 6.13),
    "Prague": (50.08, 14.44), "Paris": (48.86, 2.35),
    "Zurich": (47.38, 8.54), "Vienna": (48.21, 16.37),
    "Milan": (45.46, 9.19),
}
COST239_EDGES = [
    ("Copenhagen", "London"), ("Copenhagen", "Amsterdam"),
    ("Copenhagen", "Berlin"), ("Copenhagen", "Prague"),
    ("London", "Amsterdam"), ("London", "Brussels"), ("London", "Paris"),
    ("Amsterdam", "Berlin"), ("Amsterdam", "Brussels"),
    ("Amsterdam", "Luxembourg"), ("Berlin", "Prague"), ("Berlin", "Vienna"),
    ("Berlin", "Paris"), ("Brussels", "Paris"), ("Brussels", "Luxembourg"),
    ("Brussels", "Milan"), ("Luxembourg", "Paris"), ("Luxembourg", "Zurich"),
    ("Luxembourg", "Prague"), ("Prague", "Vienna"), ("Prague", "Zurich"),
    ("Paris", "Zurich"), ("Paris", "Milan"), ("Zurich", "Vienna"),
    ("Zurich", "Milan"), ("Vienna", "Milan"),
]
# 25-link variant drops the long Brussels-Milan span.
COST239_25 = [e for e in COST239_EDGES if e != ("Brussels", "Milan")]

USNET_COORDS = {
    "1": (47.61, -122.33), "2": (37.77, -122.42), "3": (34.05, -118.24),
    "4": (32.72, -117.16), "5": (33.45, -112.07), "6": (45.52, -122.68),
    "7": (40.76, -111.89), "8": (31.76, -106.49), "9": (39.74, -104.99),
    "10": (29.76, -95.37), "11": (44.98, -93.27), "12": (39.10, -94.58),
    "13": (32.78, -96.80), "14": (29.95, -90.07), "15": (41.88, -87.63),
    "16": (38.63, -90.20), "17": (36.16, -86.78), "18": (33.75, -84.39),
    "19": (42.33, -83.05), "20": (40.44, -79.99), "21": (38.91, -77.04),
    "22": (35.23, -80.84), "23": (40.71, -74.01), "24": (42.36, -71.06),
}
USNET_EDGES = [
    ("1", "2"), ("1", "6"), ("1", "11"), ("2", "3"), ("2", "6"), ("2", "7"),
    ("3", "4"), ("3", "5"), ("4", "5"), ("4", "8"), ("5", "7"), ("5", "8"),
    ("6", "7"), ("7", "9"), ("8", "10"), ("8", "13"), ("9", "11"),
    ("9", "12"), ("9", "13"), ("10", "13"), ("10", "14"), ("11", "15"),
    ("11", "12"), ("12", "16"), ("12", "13"), ("13", "17"), ("14", "17"),
    ("14", "18"), ("15", "16"), ("15", "19"), ("16", "17"), ("16", "20"),
    ("17", "18"), ("17", "22"), ("18", "22"), ("19", "20"), ("19", "24"),
    ("20", "21"), ("20", "23"), ("21", "22"), ("21", "23"), ("22", "23"),
    ("23", "24"),
]

JPN48_COORDS = [
    ("Sapporo", 43.06, 141.35), ("Hakodate", 41.77, 140.73),
    ("Aomori", 40.82, 140.74), ("Morioka", 39.70, 141.15),
    ("Sendai", 38.27, 140.87), ("Akita", 39.72, 140.10),
    ("Yamagata", 38.24, 140.36), ("Fukushima", 37.75, 140.47),
    ("Mito", 36.34, 140.45), ("Utsunomiya", 36.57, 139.88),
    ("Maebashi", 36.39, 139.06), ("Saitama", 35.86, 139.65),
    ("Chiba", 35.61, 140.12), ("Tokyo", 35.69, 139.69),
    ("Yokohama", 35.45, 139.64), ("Niigata", 37.90, 139.02),
    ("Toyama", 36.70, 137.21), ("Kanazawa", 36.59, 136.63),
    ("Fukui", 36.07, 136.22), ("Kofu", 35.66, 138.57),
    ("Nagano", 36.65, 138.18), ("Gifu", 35.39, 136.72),
    ("Shizuoka", 34.98, 138.38), ("Nagoya", 35.18, 136.91),
    ("Tsu", 34.73, 136.51), ("Otsu", 35.00, 135.87),
    ("Kyoto", 35.02, 135.76), ("Osaka", 34.69, 135.52),
    ("Kobe", 34.69, 135.18), ("Nara", 34.69, 135.83),
    ("Wakayama", 34.23, 135.17), ("Tottori", 35.50, 134.24),
    ("Matsue", 35.47, 133.05), ("Okayama", 34.66, 133.93),
    ("Hiroshima", 34.40, 132.46), ("Yamaguchi", 34.19, 131.47),
    ("Tokushima", 34.07, 134.56), ("Takamatsu", 34.34, 134.04),
    ("Matsuyama", 33.84, 132.77), ("Kochi", 33.56, 133.53),
    ("Fukuoka", 33.61, 130.42), ("Saga", 33.25, 130.30),
    ("Nagasaki", 32.74, 129.87), ("Kumamoto", 32.79, 130.74),
    ("Oita", 33.24, 131.61), ("Miyazaki", 31.91, 131.42),
    ("Kagoshima", 31.56, 130.56), ("Naha", 26.21, 127.68),
]


# Spans chosen so that every node pair has at least 50 loop-free paths.
JPN48_EDGES = [
    ("Akita", "Yamagata"), ("Aomori", "Akita"), ("Aomori", "Morioka"),
    ("Chiba", "Tokyo"), ("Fukui", "Gifu"), ("Fukuoka", "Kumamoto"),
    ("Fukuoka", "Nagasaki"), ("Fukuoka", "Oita"), ("Fukuoka", "Saga"),
    ("Fukushima", "Niigata"), ("Fukushima", "Utsunomiya"), ("Gifu", "Kyoto"),
    ("Gifu", "Tsu"), ("Hakodate", "Aomori"), ("Hakodate", "Yamagata"),
    ("Hiroshima", "Matsuyama"), ("Hiroshima", "Yamaguchi"),
    ("Kagoshima", "Naha"), ("Kanazawa", "Gifu"), ("Kobe", "Nara"),
    ("Kobe", "Tottori"), ("Kobe", "Wakayama"), ("Kofu", "Shizuoka"),
    ("Kumamoto", "Kagoshima"), ("Kumamoto", "Miyazaki"), ("Kumamoto", "Naha"),
    ("Kumamoto", "Oita"), ("Kyoto", "Nara"), ("Kyoto", "Osaka"),
    ("Maebashi", "Kofu"), ("Maebashi", "Nagano"), ("Maebashi", "Saitama"),
    ("Matsue", "Hiroshima"), ("Matsue", "Okayama"), ("Matsuyama", "Kochi"),
    ("Matsuyama", "Oita"), ("Mito", "Chiba"), ("Mito", "Saitama"),
    ("Mito", "Tokyo"), ("Mito", "Utsunomiya"), ("Miyazaki", "Kagoshima"),
    ("Miyazaki", "Naha"), ("Morioka", "Akita"), ("Morioka", "Sendai"),
    ("Nagasaki", "Kumamoto"), ("Nagasaki", "Naha"), ("Nagoya", "Tsu"),
    ("Niigata", "Nagano"), ("Oita", "Miyazaki"), ("Okayama", "Hiroshima"),
    ("Okayama", "Kochi"), ("Okayama", "Takamatsu"), ("Okayama", "Tokushima"),
    ("Osaka", "Kobe"), ("Osaka", "Nara"), ("Osaka", "Wakayama"),
    ("Otsu", "Kyoto"), ("Otsu", "Nara"), ("Saga", "Kumamoto"),
    ("Saga", "Nagasaki"), ("Saitama", "Yokohama"), ("Sapporo", "Hakodate"),
    ("Sapporo", "Morioka"), ("Sendai", "Fukushima"), ("Shizuoka", "Nagoya"),
    ("Takamatsu", "Kochi"), ("Tokushima", "Kochi"), ("Tokushima", "Takamatsu"),
    ("Tottori", "Matsue"), ("Tottori", "Okayama"), ("Toyama", "Fukui"),
    ("Toyama", "Kanazawa"), ("Toyama", "Nagano"), ("Tsu", "Nara"),
    ("Utsunomiya", "Chiba"), ("Utsunomiya", "Maebashi"),
    ("Wakayama", "Tokushima"), ("Yamagata", "Niigata"),
    ("Yamaguchi", "Fukuoka"), ("Yamaguchi", "Oita"), ("Yokohama", "Kofu"),
    ("Yokohama", "Shizuoka"),
]


def main(out_dir):
    os.makedirs(out_dir, exist_ok=True)
    docs = {}
    nsf_nodes = [str(i) for i in range(1, 15)]
    docs["nsfnet"] = document("nsfnet", nsf_nodes, NSFNET)
    cost_nodes = list(COST239_COORDS)
    docs["cost239"] = document(
        "cost239", cost_nodes, from_coords(COST239_COORDS, COST239_25, 1.2))
    docs["cost239_ptrnet"] = document(
        "cost239_ptrnet", cost_nodes,
        from_coords(COST239_COORDS, COST239_EDGES, 1.5), "single", 40)
    us_nodes = list(USNET_COORDS)
    docs["usnet"] = document(
        "usnet", us_nodes, from_coords(USNET_COORDS, USNET_EDGES, 0.6))
    docs["usnet_ptrnet"] = document(
        "usnet_ptrnet", us_nodes,
        from_coords(USNET_COORDS, USNET_EDGES, 1.3), "single", 40)
    jpn_nodes = [n for n, _, _ in JPN48_COORDS]
    jpn_pos = {n: (lat, lon) for n, lat, lon in JPN48_COORDS}
    docs["jpn48"] = document(
        "jpn48", jpn_nodes, from_coords(jpn_pos, JPN48_EDGES, 1.2), "single",
        100)
    for name, doc in docs.items():
        with open(os.path.join(out_dir, name + ".json"), "w") as f:
            json.dump(doc, f, indent=2)
            f.write("\n")
        print(name, len(doc["nodes"]), len(doc["links"]))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else
         os.path.join(os.path.dirname(__file__), "..", "..", "data",
                      "topologies"))
