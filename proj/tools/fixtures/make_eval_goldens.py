#!/usr/bin/env python3
# Copyright 2026 The PoseForge Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds synthetic ground-truth/prediction pairs and scores them with pycocotools.

The reference numbers are written next to the inputs and checked in, so the
test suite never needs Python. Scores and displacements are drawn from
continuous distributions so no detection sees two equally good matches.
"""

import argparse
import contextlib
import io
import json
import os

import numpy as np
from pycocotools.coco import COCO
from pycocotools.cocoeval import COCOeval

TEMPLATE = np.array([
    [0.50, 0.08], [0.53, 0.06], [0.47, 0.06], [0.56, 0.07], [0.44, 0.07],
    [0.62, 0.22], [0.38, 0.22], [0.70, 0.38], [0.30, 0.38], [0.74, 0.52],
    [0.26, 0.52], [0.58, 0.55], [0.42, 0.55], [0.60, 0.76], [0.40, 0.76],
    [0.61, 0.96], [0.39, 0.96]])


def make_gt_person(rng, width, height, unlabeled_frac):
  bw = rng.uniform(0.15, 0.35) * width
  bh = rng.uniform(0.35, 0.8) * height
  bx = rng.uniform(0, width - bw)
  by = rng.uniform(0, height - bh)
  joints = TEMPLATE + rng.normal(0, 0.03, size=(17, 2))
  vis = np.where(rng.uniform(size=17) < unlabeled_frac, 0, 2)
  if not vis.any():
    vis[5] = 2
  pts = np.stack([bx + joints[:, 0] * bw, by + joints[:, 1] * bh], axis=1)
  return [float(bx), float(by), float(bw), float(bh)], pts, vis


def keypoint_list(pts, vis):
  out = []
  for j in range(17):
    if vis[j] == 0:
      out += [0, 0, 0]
    else:
      out += [round(float(pts[j, 0]), 3), round(float(pts[j, 1]), 3), int(vis[j])]
  return out


def build_set(rng, num_images, persons_range, noise_scales, fp_rate, miss_rate,
              unlabeled_frac, extra_dets=0):
  images, gts, preds = [], [], []
  gid = 1
  for i in range(num_images):
    image_id = 100 + i
    width, height = 640, 480
    images.append({'id': image_id, 'width': width, 'height': height,
                   'file_name': 'synthetic_%03d.jpg' % image_id})
    n = int(rng.integers(persons_range[0], persons_range[1] + 1))
    for _ in range(n):
      box, pts, vis = make_gt_person(rng, width, height, unlabeled_frac)
      area = round(box[2] * box[3] * rng.uniform(0.5, 0.8), 3)
      gts.append({'id': gid, 'image_id': image_id, 'category_id': 1,
                  'bbox': [round(v, 3) for v in box], 'area': area, 'iscrowd': 0,
                  'num_keypoints': int((vis > 0).sum()),
                  'keypoints': keypoint_list(pts, vis)})
      gid += 1
      if rng.uniform() < miss_rate:
        continue
      scale = rng.choice(noise_scales) * np.sqrt(area)
      ppts = pts + rng.normal(0, scale, size=pts.shape)
      pbox = [box[0] + rng.normal(0, scale), box[1] + rng.normal(0, scale),
              box[2] * rng.uniform(0.85, 1.15), box[3] * rng.uniform(0.85, 1.15)]
      preds.append({'image_id': image_id, 'category_id': 1,
                    'keypoints': keypoint_list(ppts, np.full(17, 2)),
                    'bbox': [round(float(v), 3) for v in pbox],
                    'score': round(float(rng.uniform(0.05, 0.99)), 6)})
    num_fp = int(rng.poisson(fp_rate)) + extra_dets
    for _ in range(num_fp):
      box, pts, _ = make_gt_person(rng, width, height, 0.0)
      preds.append({'image_id': image_id, 'category_id': 1,
                    'keypoints': keypoint_list(pts, np.full(17, 2)),
                    'bbox': [round(v, 3) for v in box],
                    'score': round(float(rng.uniform(0.01, 0.9)), 6)})
  doc = {'images': images, 'annotations': gts,
         'categories': [{'id': 1, 'name': 'person', 'supercategory': 'person'}]}
  return doc, preds


def reference_scores(gt_path, preds, iou_type):
  with contextlib.redirect_stdout(io.StringIO()):
    coco_gt = COCO(gt_path)
    coco_dt = coco_gt.loadRes(preds)
    ev = COCOeval(coco_gt, coco_dt, iou_type)
    ev.evaluate()
    ev.accumulate()
  m = len(ev.params.maxDets) - 1
  rows = []
  for t, thr in enumerate(ev.params.iouThrs):
    prec = ev.eval['precision'][t, :, 0, 0, m]
    ap = float(np.mean(prec[prec > -1])) if (prec > -1).any() else -1.0
    ar = float(ev.eval['recall'][t, 0, 0, m])
    rows.append({'threshold': float(thr), 'AP': ap, 'AR': ar})
  return rows


def text_report(kind, rows):
  lines = ['threshold=%.2f AP=%.6f AR=%.6f' % (r['threshold'], r['AP'], r['AR']) for r in rows]
  mean_ap = float(np.mean([r['AP'] for r in rows]))
  mean_ar = float(np.mean([r['AR'] for r in rows]))
  lines.append('summary kind=%s thresholds=%d mAP=%.6f mAR=%.6f' %
               (kind, len(rows), mean_ap, mean_ar))
  return '\n'.join(lines) + '\n', mean_ap, mean_ar


SETS = [
    # name, kind, seed, images, persons, noise scales, fp rate, miss rate, unlabeled, extra dets
    ('set1_displaced', 'oks', 1, 5, (1, 3), [0.02, 0.05, 0.1, 0.2], 0.0, 0.0, 0.0, 0),
    ('set2_misses_and_fps', 'oks', 2, 5, (2, 4), [0.03, 0.08, 0.15], 1.5, 0.25, 0.1, 0),
    ('set3_partial_labels', 'oks', 3, 5, (1, 4), [0.01, 0.04, 0.12, 0.3], 0.5, 0.1, 0.45, 0),
    ('set4_crowded', 'oks', 4, 5, (3, 6), [0.02, 0.06, 0.1], 0.0, 0.05, 0.1, 18),
    ('set5_boxes', 'iou', 5, 5, (1, 4), [0.01, 0.03, 0.08, 0.15], 1.0, 0.15, 0.0, 0),
]


def main():
  parser = argparse.ArgumentParser()
  parser.add_argument('--out-dir', required=True)
  args = parser.parse_args()
  os.makedirs(args.out_dir, exist_ok=True)

  for name, kind, seed, n_img, persons, noise, fp, miss, unl, extra in SETS:
    rng = np.random.default_rng(seed)
    doc, preds = build_set(rng, n_img, persons, noise, fp, miss, unl, extra)
    if kind == 'iou':
      preds = [{k: v for k, v in p.items() if k != 'keypoints'} for p in preds]
    gt_path = os.path.join(args.out_dir, name + '_gt.json')
    with open(gt_path, 'w') as f:
      json.dump(doc, f, indent=1)
      f.write('\n')
    with open(os.path.join(args.out_dir, name + '_pred.json'), 'w') as f:
      json.dump(preds, f, indent=1)
      f.write('\n')
    rows = reference_scores(gt_path, preds, 'keypoints' if kind == 'oks' else 'bbox')
    text, mean_ap, mean_ar = text_report(kind, rows)
    with open(os.path.join(args.out_dir, name + '_golden.json'), 'w') as f:
      json.dump({'kind': kind, 'mAP': mean_ap, 'mAR': mean_ar, 'perThreshold': rows}, f,
                indent=1)
      f.write('\n')
    with open(os.path.join(args.out_dir, name + '_golden.txt'), 'w') as f:
      f.write(text)

  # Predictions identical to the ground truth.
  rng = np.random.default_rng(6)
  doc, _ = build_set(rng, 5, (1, 4), [0.0], 0.0, 0.0, 0.0)
  preds = []
  for i, ann in enumerate(doc['annotations']):
    preds.append({'image_id': ann['image_id'], 'category_id': 1, 'keypoints': ann['keypoints'],
                  'score': round(0.99 - 0.03 * i, 6)})
  with open(os.path.join(args.out_dir, 'perfect_gt.json'), 'w') as f:
    json.dump(doc, f, indent=1)
    f.write('\n')
  with open(os.path.join(args.out_dir, 'perfect_pred.json'), 'w') as f:
    json.dump(preds, f, indent=1)
    f.write('\n')


if __name__ == '__main__':
  main()
