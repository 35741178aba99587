#!/usr/bin/env python3
"""Generate the bundled planar atlas (src/micromaps/data/us_atlas.json).

Outlines are coarse hand-simplified state silhouettes in lon/lat, projected
here once to planar screen units (x east, y south) so the engine never does
projection math. Alaska and Hawaii are emitted in local frames and placed
via inset declarations below the lower 48; Washington, DC is a small square
at its true location that an inset enlarges and moves offshore so it stays
visible at micromap size.

Run from the repo root:  python3 tools/make_atlas.py
"""

from __future__ import annotations

import json
import math
import pathlib

K = 13.0
CONUS_LON0 = -125.0
CONUS_LAT1 = 49.6
CONUS_COS = math.cos(math.radians(38.0))

# fmt: off
CONUS_OUTLINES: dict[str, list[list[tuple[float, float]]]] = {
    "WA": [[(-124.7, 48.4), (-123.3, 49.0), (-117.03, 49.0), (-117.03, 46.0),
            (-119.0, 46.0), (-121.2, 45.7), (-124.1, 46.3)]],
    "OR": [[(-124.1, 46.3), (-121.2, 45.7), (-119.0, 46.0), (-117.03, 46.0),
            (-116.9, 45.6), (-116.5, 45.0), (-117.2, 44.3), (-117.03, 42.0),
            (-124.4, 42.0)]],
    "CA": [[(-124.4, 42.0), (-120.0, 42.0), (-120.0, 39.0), (-114.6, 35.0),
            (-114.7, 32.7), (-117.1, 32.5), (-120.6, 34.5), (-122.4, 37.2),
            (-124.0, 40.0)]],
    "NV": [[(-120.0, 42.0), (-114.05, 42.0), (-114.05, 37.0), (-114.6, 35.0),
            (-120.0, 39.0)]],
    "ID": [[(-117.03, 49.0), (-116.05, 49.0), (-116.05, 48.0), (-114.3, 46.7),
            (-113.0, 45.9), (-111.4, 45.0), (-111.05, 44.5), (-111.05, 42.0),
            (-114.05, 42.0), (-117.03, 42.0)]],
    "MT": [[(-116.05, 49.0), (-104.05, 49.0), (-104.05, 45.0), (-111.05, 45.0),
            (-111.05, 44.5), (-111.4, 45.0), (-113.0, 45.9), (-114.3, 46.7),
            (-116.05, 48.0)]],
    "WY": [[(-111.05, 45.0), (-104.05, 45.0), (-104.05, 41.0), (-111.05, 41.0)]],
    "UT": [[(-114.05, 42.0), (-111.05, 42.0), (-111.05, 41.0), (-109.05, 41.0),
            (-109.05, 37.0), (-114.05, 37.0)]],
    "CO": [[(-109.05, 41.0), (-102.05, 41.0), (-102.05, 37.0), (-109.05, 37.0)]],
    "AZ": [[(-114.05, 37.0), (-109.05, 37.0), (-109.05, 31.33), (-111.07, 31.33),
            (-114.8, 32.5), (-114.6, 35.0), (-114.05, 36.2)]],
    "NM": [[(-109.05, 37.0), (-103.0, 37.0), (-103.0, 32.0), (-106.6, 32.0),
            (-106.5, 31.8), (-108.2, 31.8), (-108.2, 31.33), (-109.05, 31.33)]],
    "ND": [[(-104.05, 49.0), (-97.2, 49.0), (-96.6, 46.0), (-104.05, 46.0)]],
    "SD": [[(-104.05, 46.0), (-96.6, 46.0), (-96.45, 45.3), (-96.6, 43.5),
            (-96.45, 43.0), (-98.0, 42.9), (-104.05, 43.0)]],
    "NE": [[(-104.05, 43.0), (-98.0, 42.9), (-96.45, 43.0), (-95.3, 40.0),
            (-102.05, 40.0), (-102.05, 41.0), (-104.05, 41.0)]],
    "KS": [[(-102.05, 40.0), (-95.3, 40.0), (-94.6, 39.1), (-94.6, 37.0),
            (-102.05, 37.0)]],
    "OK": [[(-103.0, 37.0), (-94.6, 37.0), (-94.43, 35.4), (-94.43, 33.6),
            (-96.4, 33.8), (-98.1, 34.1), (-99.4, 34.4), (-100.0, 34.56),
            (-100.0, 36.5), (-103.0, 36.5)]],
    "TX": [[(-106.6, 32.0), (-103.0, 32.0), (-103.0, 36.5), (-100.0, 36.5),
            (-100.0, 34.56), (-99.4, 34.4), (-98.1, 34.1), (-96.4, 33.8),
            (-94.43, 33.6), (-93.8, 33.0), (-93.7, 30.0), (-93.9, 29.7),
            (-95.0, 29.3), (-97.1, 27.8), (-97.4, 25.9), (-99.5, 27.5),
            (-101.4, 29.8), (-103.1, 29.0), (-104.9, 30.6), (-106.5, 31.8)]],
    "MN": [[(-97.2, 49.0), (-95.15, 49.0), (-95.15, 49.38), (-94.6, 48.7),
            (-92.0, 48.3), (-89.8, 47.9), (-92.1, 46.75), (-92.75, 45.8),
            (-92.75, 44.6), (-91.3, 43.8), (-91.25, 43.5), (-96.45, 43.5),
            (-96.45, 45.3), (-96.6, 46.0)]],
    "IA": [[(-96.45, 43.5), (-91.25, 43.5), (-91.1, 42.7), (-90.2, 42.0),
            (-90.3, 41.4), (-91.1, 40.7), (-91.4, 40.4), (-93.3, 40.6),
            (-95.8, 40.6), (-95.9, 41.5), (-96.35, 42.5), (-96.45, 43.0)]],
    "MO": [[(-95.8, 40.6), (-91.4, 40.4), (-90.7, 39.2), (-90.2, 38.8),
            (-89.5, 37.9), (-89.5, 37.3), (-89.2, 36.6), (-89.5, 36.5),
            (-89.5, 36.0), (-90.3, 36.0), (-90.2, 36.5), (-94.6, 36.5),
            (-94.6, 39.1), (-95.1, 39.9)]],
    "AR": [[(-94.6, 36.5), (-90.2, 36.5), (-90.3, 36.0), (-89.7, 36.0),
            (-90.3, 35.4), (-91.1, 34.0), (-91.2, 33.0), (-94.04, 33.0),
            (-94.43, 33.6), (-94.43, 35.4)]],
    "LA": [[(-94.04, 33.0), (-91.2, 33.0), (-91.6, 31.0), (-89.7, 31.0),
            (-89.6, 30.2), (-89.2, 29.6), (-89.4, 28.9), (-90.2, 29.1),
            (-91.8, 29.5), (-93.8, 29.7), (-93.9, 31.0)]],
    "WI": [[(-92.75, 45.8), (-92.1, 46.75), (-90.8, 46.7), (-90.4, 46.6),
            (-89.0, 46.1), (-87.8, 45.4), (-87.0, 45.3), (-87.8, 44.1),
            (-87.9, 43.0), (-87.8, 42.5), (-90.64, 42.5), (-91.1, 43.3),
            (-91.25, 43.8), (-92.3, 44.5), (-92.75, 44.6)]],
    "IL": [[(-90.64, 42.5), (-87.8, 42.5), (-87.53, 41.76), (-87.53, 39.5),
            (-87.6, 38.9), (-88.0, 38.1), (-88.1, 37.47), (-88.5, 37.07),
            (-89.2, 37.0), (-89.5, 37.3), (-89.5, 37.9), (-90.2, 38.8),
            (-90.7, 39.2), (-91.4, 40.4), (-91.1, 40.7), (-90.3, 41.4),
            (-90.2, 42.0)]],
    "MI": [[(-86.8, 41.76), (-86.3, 42.8), (-86.2, 43.8), (-86.5, 44.8),
            (-85.6, 45.2), (-84.9, 45.8), (-84.4, 45.7), (-83.4, 45.0),
            (-82.5, 44.0), (-82.42, 43.0), (-82.6, 42.6), (-83.1, 42.1),
            (-83.5, 41.73)],
           [(-90.4, 46.6), (-89.9, 46.8), (-88.4, 47.4), (-87.6, 47.2),
            (-86.7, 46.9), (-85.0, 46.77), (-84.1, 46.5), (-84.1, 46.2),
            (-84.4, 46.0), (-85.0, 46.0), (-86.3, 45.95), (-87.1, 45.5),
            (-87.6, 45.1), (-87.8, 45.35), (-88.7, 46.0), (-90.0, 46.3)]],
    "IN": [[(-87.53, 41.76), (-84.81, 41.7), (-84.81, 39.1), (-85.4, 38.7),
            (-86.0, 38.0), (-86.8, 37.95), (-88.0, 37.8), (-87.9, 38.3),
            (-87.53, 39.5)]],
    "OH": [[(-84.81, 41.7), (-83.5, 41.73), (-82.7, 41.6), (-81.5, 41.8),
            (-80.52, 42.0), (-80.52, 40.6), (-81.3, 39.7), (-82.1, 38.95),
            (-82.6, 38.4), (-83.3, 38.6), (-84.3, 38.9), (-84.81, 39.1)]],
    "KY": [[(-84.81, 39.1), (-84.3, 38.9), (-83.3, 38.6), (-82.6, 38.4),
            (-82.3, 37.7), (-81.97, 37.54), (-83.68, 36.6), (-89.4, 36.5),
            (-89.2, 37.0), (-88.5, 37.07), (-88.1, 37.47), (-88.0, 37.8),
            (-86.8, 37.95), (-86.0, 38.0), (-85.4, 38.7)]],
    "TN": [[(-89.4, 36.5), (-83.68, 36.6), (-81.65, 36.6), (-82.2, 36.1),
            (-84.3, 35.0), (-90.1, 35.0), (-89.7, 36.0), (-89.5, 36.25)]],
    "MS": [[(-90.3, 35.0), (-88.2, 35.0), (-88.47, 31.89), (-88.4, 30.2),
            (-89.6, 30.2), (-89.7, 31.0), (-91.6, 31.0), (-91.2, 33.0),
            (-91.1, 34.0), (-90.3, 35.4)]],
    "AL": [[(-88.2, 35.0), (-85.6, 35.0), (-85.1, 32.9), (-85.0, 31.0),
            (-87.6, 31.0), (-87.4, 30.4), (-88.0, 30.23), (-88.4, 30.2),
            (-88.47, 31.89)]],
    "GA": [[(-85.6, 35.0), (-83.1, 35.0), (-82.2, 34.5), (-81.4, 33.0),
            (-80.9, 32.03), (-81.2, 31.5), (-81.5, 30.72), (-82.2, 30.57),
            (-84.9, 30.75), (-85.0, 31.0), (-85.1, 32.9)]],
    "FL": [[(-87.6, 31.0), (-85.0, 31.0), (-84.9, 30.75), (-82.2, 30.57),
            (-81.5, 30.72), (-81.3, 29.8), (-80.5, 28.5), (-80.05, 26.8),
            (-80.1, 25.8), (-80.4, 25.2), (-81.1, 25.2), (-81.7, 26.0),
            (-82.7, 27.5), (-82.65, 28.9), (-83.7, 29.9), (-84.4, 30.0),
            (-85.3, 29.7), (-86.2, 30.4), (-87.5, 30.3)]],
    "SC": [[(-83.1, 35.0), (-80.8, 35.0), (-78.55, 33.87), (-79.3, 33.1),
            (-80.9, 32.03), (-81.4, 33.0), (-82.2, 34.5)]],
    "NC": [[(-84.32, 34.99), (-84.3, 35.0), (-82.2, 36.1), (-81.65, 36.6),
            (-75.8, 36.55), (-75.8, 36.0), (-75.5, 35.2), (-76.2, 34.9),
            (-77.9, 34.2), (-78.55, 33.87), (-80.8, 35.0), (-83.1, 35.0)]],
    "VA": [[(-75.8, 36.55), (-81.65, 36.6), (-83.3, 36.7), (-83.68, 36.6),
            (-81.97, 37.54), (-81.4, 37.3), (-80.1, 37.7), (-79.1, 38.4),
            (-78.35, 39.45), (-77.8, 39.3), (-77.04, 38.8), (-76.3, 37.9),
            (-76.3, 37.0)]],
    "WV": [[(-77.72, 39.32), (-78.35, 39.45), (-79.1, 38.4), (-80.1, 37.7),
            (-81.4, 37.3), (-81.97, 37.54), (-82.3, 37.7), (-82.6, 38.4),
            (-82.1, 38.95), (-81.3, 39.7), (-80.52, 40.6), (-80.52, 40.64),
            (-80.52, 39.72), (-79.48, 39.72), (-79.48, 39.21)]],
    "MD": [[(-79.48, 39.72), (-75.79, 39.72), (-75.7, 38.46), (-75.05, 38.45),
            (-75.9, 37.95), (-76.35, 38.3), (-76.4, 39.2), (-77.2, 38.95),
            (-77.72, 39.32)]],
    "DE": [[(-75.79, 39.72), (-75.47, 39.83), (-75.4, 39.6), (-75.05, 38.45),
            (-75.7, 38.46)]],
    "PA": [[(-80.52, 42.33), (-79.76, 42.27), (-79.76, 42.0), (-75.35, 41.99),
            (-75.07, 41.6), (-74.73, 41.35), (-75.13, 40.97), (-74.9, 40.1),
            (-75.1, 39.88), (-75.47, 39.83), (-75.79, 39.72), (-80.52, 39.72)]],
    "NJ": [[(-74.73, 41.35), (-73.9, 41.0), (-74.0, 40.45), (-74.1, 39.7),
            (-74.4, 39.37), (-74.9, 38.93), (-75.5, 39.5), (-75.1, 39.88),
            (-74.9, 40.1), (-75.13, 40.97)]],
    "NY": [[(-79.76, 42.27), (-78.9, 42.9), (-78.7, 43.34), (-77.5, 43.3),
            (-76.5, 43.5), (-76.1, 44.3), (-74.8, 45.0), (-73.34, 45.01),
            (-73.35, 43.8), (-73.25, 42.75), (-73.5, 42.05), (-73.48, 41.21),
            (-71.9, 41.1), (-73.6, 40.55), (-74.0, 40.6), (-73.9, 40.95),
            (-74.7, 41.36), (-74.73, 41.35), (-75.07, 41.6), (-75.35, 41.99),
            (-79.76, 42.0)]],
    "CT": [[(-73.5, 42.05), (-71.8, 42.01), (-71.86, 41.32), (-72.9, 41.25),
            (-73.48, 41.21), (-73.55, 41.6)]],
    "RI": [[(-71.8, 42.01), (-71.38, 42.02), (-71.3, 41.75), (-71.1, 41.5),
            (-71.5, 41.35), (-71.86, 41.32)]],
    "MA": [[(-73.5, 42.05), (-73.25, 42.75), (-71.3, 42.7), (-70.9, 42.88),
            (-70.6, 42.65), (-70.5, 42.3), (-70.0, 42.07), (-69.95, 41.75),
            (-70.5, 41.55), (-71.1, 41.5), (-71.3, 41.75), (-71.38, 42.02),
            (-71.8, 42.01)]],
    "VT": [[(-73.34, 45.01), (-71.5, 45.01), (-72.1, 44.0), (-72.45, 42.73),
            (-73.25, 42.75), (-73.35, 43.8)]],
    "NH": [[(-71.5, 45.01), (-71.08, 45.3), (-70.97, 43.8), (-70.7, 43.07),
            (-70.9, 42.88), (-72.45, 42.73), (-72.1, 44.0)]],
    "ME": [[(-71.08, 45.3), (-70.3, 45.9), (-69.2, 47.46), (-68.3, 47.36),
            (-67.8, 47.07), (-67.78, 45.94), (-67.0, 44.8), (-68.0, 44.4),
            (-69.2, 43.8), (-70.2, 43.56), (-70.7, 43.07), (-70.97, 43.8)]],
    "DC": [[(-77.12, 38.995), (-76.91, 38.995), (-76.91, 38.79), (-77.12, 38.79)]],
}

AK_OUTLINE = [[(-156.6, 71.36), (-142.0, 70.0), (-141.0, 69.65), (-141.0, 60.3),
               (-139.0, 60.0), (-135.5, 59.8), (-130.0, 56.1), (-130.0, 54.8),
               (-134.0, 56.0), (-136.7, 58.0), (-139.5, 59.5), (-141.8, 59.9),
               (-147.8, 60.9), (-150.0, 59.3), (-152.0, 57.5), (-154.0, 56.5),
               (-158.5, 55.4), (-163.0, 54.7), (-165.4, 54.4), (-164.0, 55.5),
               (-160.5, 56.5), (-157.5, 58.3), (-158.0, 58.9), (-162.0, 58.6),
               (-165.6, 59.8), (-164.0, 60.9), (-165.7, 62.0), (-164.0, 63.3),
               (-168.1, 65.6), (-164.0, 66.6), (-166.9, 68.3), (-161.0, 70.3)]]

HI_OUTLINE = [[(-155.8, 20.27), (-155.0, 19.75), (-154.8, 19.5), (-155.5, 18.9),
               (-155.9, 19.1), (-156.05, 19.75)],
              [(-156.7, 21.0), (-156.0, 20.75), (-156.45, 20.57), (-156.7, 20.8)],
              [(-158.3, 21.58), (-157.65, 21.3), (-158.1, 21.25)],
              [(-159.8, 22.23), (-159.3, 22.05), (-159.6, 21.87)]]
# fmt: on

NAMES_FIPS = {
    "AL": ("Alabama", "01"), "AK": ("Alaska", "02"), "AZ": ("Arizona", "04"),
    "AR": ("Arkansas", "05"), "CA": ("California", "06"), "CO": ("Colorado", "08"),
    "CT": ("Connecticut", "09"), "DE": ("Delaware", "10"),
    "DC": ("District of Columbia", "11"), "FL": ("Florida", "12"),
    "GA": ("Georgia", "13"), "HI": ("Hawaii", "15"), "ID": ("Idaho", "16"),
    "IL": ("Illinois", "17"), "IN": ("Indiana", "18"), "IA": ("Iowa", "19"),
    "KS": ("Kansas", "20"), "KY": ("Kentucky", "21"), "LA": ("Louisiana", "22"),
    "ME": ("Maine", "23"), "MD": ("Maryland", "24"), "MA": ("Massachusetts", "25"),
    "MI": ("Michigan", "26"), "MN": ("Minnesota", "27"), "MS": ("Mississippi", "28"),
    "MO": ("Missouri", "29"), "MT": ("Montana", "30"), "NE": ("Nebraska", "31"),
    "NV": ("Nevada", "32"), "NH": ("New Hampshire", "33"), "NJ": ("New Jersey", "34"),
    "NM": ("New Mexico", "35"), "NY": ("New York", "36"),
    "NC": ("North Carolina", "37"), "ND": ("North Dakota", "38"), "OH": ("Ohio", "39"),
    "OK": ("Oklahoma", "40"), "OR": ("Oregon", "41"), "PA": ("Pennsylvania", "42"),
    "RI": ("Rhode Island", "44"), "SC": ("South Carolina", "45"),
    "SD": ("South Dakota", "46"), "TN": ("Tennessee", "47"), "TX": ("Texas", "48"),
    "UT": ("Utah", "49"), "VT": ("Vermont", "50"), "VA": ("Virginia", "51"),
    "WA": ("Washington", "53"), "WV": ("West Virginia", "54"),
    "WI": ("Wisconsin", "55"), "WY": ("Wyoming", "56"),
}


def conus_xy(lon: float, lat: float) -> list[float]:
    return [round((lon - CONUS_LON0) * CONUS_COS * K, 1),
            round((CONUS_LAT1 - lat) * K, 1)]


def local_xy(lon: float, lat: float, lon0: float, lat1: float,
             cos_lat: float) -> list[float]:
    return [round((lon - lon0) * cos_lat * K, 1), round((lat1 - lat) * K, 1)]


def project(rings, proj) -> list:
    out = []
    for ring in rings:
        pts = [proj(lon, lat) for lon, lat in ring]
        pts.append(list(pts[0]))
        out.append([pts])
    return out


def feature(code: str, polygons: list) -> dict:
    name, fips = NAMES_FIPS[code]
    if len(polygons) == 1:
        geometry = {"type": "Polygon", "coordinates": polygons[0]}
    else:
        geometry = {"type": "MultiPolygon", "coordinates": polygons}
    return {"type": "Feature",
            "properties": {"code": code, "name": name, "fips": fips},
            "geometry": geometry}


def bbox(polygons) -> tuple[float, float, float, float]:
    xs = [x for poly in polygons for ring in poly for x, _ in ring]
    ys = [y for poly in polygons for ring in poly for _, y in ring]
    return min(xs), min(ys), max(xs), max(ys)


def inset_for(code: str, polygons, scale: float,
              origin: tuple[float, float]) -> dict:
    x0, y0, _, _ = bbox(polygons)
    return {"code": code,
            "translate": [round(origin[0] - scale * x0, 1),
                          round(origin[1] - scale * y0, 1)],
            "scale": scale}


def main() -> None:
    features = []
    insets = []

    for code, rings in sorted(CONUS_OUTLINES.items()):
        features.append(feature(code, project(rings, conus_xy)))

    ak = project(AK_OUTLINE,
                 lambda lon, lat: local_xy(lon, lat, -180.0, 71.6,
                                           math.cos(math.radians(62.0))))
    features.append(feature("AK", ak))
    insets.append(inset_for("AK", ak, 0.38, (12.0, 330.0)))

    hi = project(HI_OUTLINE,
                 lambda lon, lat: local_xy(lon, lat, -160.5, 22.4,
                                           math.cos(math.radians(21.0))))
    features.append(feature("HI", hi))
    insets.append(inset_for("HI", hi, 0.9, (170.0, 355.0)))

    dc = project(CONUS_OUTLINES["DC"], conus_xy)
    insets.append(inset_for("DC", dc, 6.0, (566.0, 128.0)))

    doc = {"type": "FeatureCollection", "features": features, "insets": insets}
    out = pathlib.Path(__file__).resolve().parent.parent / "src" / "micromaps" / "data" / "us_atlas.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, separators=(",", ":")) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
