#ifndef WIRE_MESSAGE_H
#define WIRE_MESSAGE_H

typedef struct GimpWireMessage {
    int message_type;
    int payload_size;
    char payload_bytes[256];
} GimpWireMessage;

int read_subframe(FrameBuffer *frame_buffer);

#endif
