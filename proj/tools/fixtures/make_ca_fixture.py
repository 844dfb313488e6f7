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
"""Writes a synthetic vase-painting validation split and its retrieval labels.

303 images, 531 person boxes, 303 of them with keypoints. Every character
has its own template pose so same-character queries tend to rank together.
"""

import argparse
import json
import os

import numpy as np

NUM_IMAGES = 303
NUM_PERSONS = 531

# x, y of each joint for an upright figure in a unit box.
BASE_POSE = np.array([
    [0.50, 0.08], [0.53, 0.06], [0.47, 0.06], [0.56, 0.07], [0.44, 0.07],
    [0.62, 0.22], [0.38, 0.22], [0.70, 0.38], [0.30, 0.38], [0.74, 0.52],
    [0.26, 0.52], [0.58, 0.55], [0.42, 0.55], [0.60, 0.76], [0.40, 0.76],
    [0.61, 0.96], [0.39, 0.96]])


def read_vocabulary(path):
  vocab = {}
  with open(path) as f:
    for line in f:
      line = line.strip()
      if not line or line.startswith('#'):
        continue
      key, value = line.split('=', 1)
      vocab[key.strip()] = [v.strip() for v in value.split(',')]
  return vocab['characters'], vocab['scenes']


def character_templates(rng, count):
  templates = []
  for _ in range(count):
    t = BASE_POSE.copy()
    # arms and legs swing per character
    t[7:11] += rng.uniform(-0.18, 0.18, size=(4, 2))
    t[13:17] += rng.uniform(-0.12, 0.12, size=(4, 2))
    templates.append(t)
  return templates


def main():
  parser = argparse.ArgumentParser()
  parser.add_argument('--vocab', required=True)
  parser.add_argument('--out-dir', required=True)
  parser.add_argument('--seed', type=int, default=20210)
  args = parser.parse_args()

  characters, scenes = read_vocabulary(args.vocab)
  rng = np.random.default_rng(args.seed)
  templates = character_templates(rng, len(characters))

  extra = NUM_PERSONS - NUM_IMAGES
  extra_per_image = np.zeros(NUM_IMAGES, dtype=int)
  for i in rng.choice(NUM_IMAGES, size=extra, replace=True):
    extra_per_image[i] += 1

  images, annotations, labels = [], [], []
  next_id = 1
  for img_index in range(NUM_IMAGES):
    image_id = 5000 + img_index
    width = int(rng.integers(480, 1024))
    height = int(rng.integers(480, 1024))
    images.append({'id': image_id, 'width': width, 'height': height,
                   'file_name': 'ca_val_%04d.jpg' % img_index})

    c = int(rng.integers(len(characters)))
    scene = scenes[c // 3]
    bw = float(rng.uniform(0.2, 0.45) * width)
    bh = float(rng.uniform(0.45, 0.9) * height)
    bx = float(rng.uniform(0, width - bw))
    by = float(rng.uniform(0, height - bh))
    joints = templates[c] + rng.normal(0, 0.02, size=(17, 2))
    joints = np.clip(joints, 0.0, 1.0)
    vis = rng.choice([0, 1, 2], size=17, p=[0.12, 0.18, 0.70])
    if not vis.any():
      vis[0] = 2
    kps = []
    for j in range(17):
      if vis[j] == 0:
        kps += [0, 0, 0]
      else:
        kps += [round(bx + joints[j, 0] * bw, 2), round(by + joints[j, 1] * bh, 2), int(vis[j])]
    ann_id = next_id
    next_id += 1
    annotations.append({
        'id': ann_id, 'image_id': image_id, 'category_id': 1,
        'bbox': [round(bx, 2), round(by, 2), round(bw, 2), round(bh, 2)],
        'area': round(bw * bh * 0.6, 2), 'iscrowd': 0,
        'num_keypoints': int((vis > 0).sum()), 'keypoints': kps})
    labels.append((ann_id, characters[c], scene))

    for _ in range(extra_per_image[img_index]):
      w = float(rng.uniform(0.1, 0.3) * width)
      h = float(rng.uniform(0.3, 0.7) * height)
      x = float(rng.uniform(0, width - w))
      y = float(rng.uniform(0, height - h))
      annotations.append({
          'id': next_id, 'image_id': image_id, 'category_id': 1,
          'bbox': [round(x, 2), round(y, 2), round(w, 2), round(h, 2)],
          'area': round(w * h, 2), 'iscrowd': 0})
      next_id += 1

  doc = {'images': images, 'annotations': annotations,
         'categories': [{'id': 1, 'name': 'person', 'supercategory': 'person'}]}
  os.makedirs(args.out_dir, exist_ok=True)
  with open(os.path.join(args.out_dir, 'ca_val_annotations.json'), 'w') as f:
    json.dump(doc, f, separators=(',', ':'))
    f.write('\n')
  with open(os.path.join(args.out_dir, 'ca_val_labels.csv'), 'w') as f:
    f.write('person_id,character,scene\n')
    for ann_id, character, scene in labels:
      f.write('%d,%s,%s\n' % (ann_id, character, scene))


if __name__ == '__main__':
  main()
