// Grouped bar charts over the 1..5 scale, one group per Likert value and
// one bar per mode. The numeric model is computed separately from the SVG
// so tests can compare it against the summary endpoint exactly.

import type { Dimension, Mode, Summary } from "./types.js";

export interface ChartModel {
  dimension: Dimension;
  scale: number[]; // 1..5
  series: { mode: Mode; label: string; values: number[]; mean: number | null }[];
  maxValue: number;
}

const MODE_LABELS: Record<Mode, string> = {
  without_explanation: "without explanation",
  with_explanation: "with explanation",
};

export function chartModel(summary: Summary, dimension: Dimension): ChartModel {
  const cells = summary[dimension];
  const series = (Object.keys(MODE_LABELS) as Mode[]).map((mode) => ({
    mode,
    label: MODE_LABELS[mode],
    values: [...cells[mode].histogram],
    mean: cells[mode].mean,
  }));
  const maxValue = Math.max(1, ...series.flatMap((s) => s.values));
  return { dimension, scale: [1, 2, 3, 4, 5], series, maxValue };
}

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 360;
const HEIGHT = 180;
const BASE = HEIGHT - 24;
const BAR = 24;

export function renderGroupedBars(container: HTMLElement, model: ChartModel): void {
  container.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("class", "chart");

  model.scale.forEach((value, groupIdx) => {
    const groupX = 20 + groupIdx * 66;
    model.series.forEach((series, seriesIdx) => {
      const height = (series.values[groupIdx] / model.maxValue) * (BASE - 20);
      const rect = document.createElementNS(SVG_NS, "rect");
      rect.setAttribute("x", String(groupX + seriesIdx * (BAR + 2)));
      rect.setAttribute("y", String(BASE - height));
      rect.setAttribute("width", String(BAR));
      rect.setAttribute("height", String(Math.max(height, 0.5)));
      rect.setAttribute("class", `bar bar-${series.mode}`);
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = `${series.label}: ${series.values[groupIdx]}`;
      rect.appendChild(title);
      svg.appendChild(rect);
    });
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(groupX + BAR + 1));
    label.setAttribute("y", String(HEIGHT - 8));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "axis-label");
    label.textContent = String(value);
    svg.appendChild(label);
  });

  container.appendChild(svg);
}
