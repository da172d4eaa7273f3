// Payload shapes as served by the HTTP API. Field names mirror the wire
// format exactly; nothing here is recomputed client-side.

export interface UserRow {
  user_id: string;
  record_count: number;
  first_time: string;
  last_time: string;
}

export interface GraphNode {
  label: string;
  visit_count: number;
}

export interface GraphEdge {
  from: string;
  to: string;
  transition_count: number;
  pattern_support?: number;
}

export interface GraphPayload {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface PatternRow {
  items: string[];
  support: number;
}

export interface StatsPayload {
  record_count: number;
  distinct_labels: number;
  session_count: number;
  top_patterns: PatternRow[];
}

export interface IngestReport {
  total_lines: number;
  parsed: number;
  rejected: {
    field_count: number;
    numeric: number;
    timestamp: number;
  };
}

export type WeightMode = "transitions" | "pattern_support";
